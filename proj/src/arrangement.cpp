#include "arr/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "arr/exactlinalg.hpp"

namespace arr {

LinearForm LinearForm::from_rationals(std::vector<Rat> coeffs) {
  Int den_lcm = 1;
  for (const auto& q : coeffs)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> c(coeffs.size());
  Int g = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rat q = coeffs[i] * Rat(den_lcm);
    c[i] = q.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("zero linear form");
  for (auto& z : c) z /= g;
  for (const auto& z : c) {
    if (sgn(z) == 0) continue;
    if (sgn(z) < 0)
      for (auto& y : c) y = -y;
    break;
  }
  LinearForm f;
  f.c = std::move(c);
  return f;
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  if (p.is_zero() || p.degree() != 1 || !p.is_homogeneous())
    throw std::invalid_argument("not a homogeneous linear form: " + p.to_string());
  std::vector<Rat> coeffs(p.nvars(), Rat(0));
  for (const auto& t : p.terms())
    for (int i = 0; i < p.nvars(); ++i)
      if (t.mono.e[i] == 1) coeffs[i] = t.coef;
  return from_rationals(std::move(coeffs));
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> raw;
  for (int i = 0; i < nvars(); ++i)
    if (sgn(c[i]) != 0) raw.push_back({Monomial::var(nvars(), i), Rat(c[i])});
  return Polynomial::from_terms(nvars(), std::move(raw));
}

int Arrangement::weight() const {
  int w = 0;
  for (int m : mult) w += m;
  return w;
}

bool Arrangement::is_simple() const {
  for (int m : mult)
    if (m != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing and serialization

Arrangement parse_arrangement(const std::string& text) {
  Arrangement a;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r\n");
    line = line.substr(first, last - first + 1);
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ArrParseError(lineno, "expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (key == "vars") {
      if (have_vars) throw ArrParseError(lineno, "duplicate vars line");
      try {
        a.nvars = std::stoi(value);
      } catch (...) {
        throw ArrParseError(lineno, "bad variable count");
      }
      if (a.nvars < 1 || a.nvars > kMaxVars)
        throw ArrParseError(lineno, "variable count out of range (1.." +
                                        std::to_string(kMaxVars) + ")");
      have_vars = true;
    } else if (key == "form") {
      if (!have_vars) throw ArrParseError(lineno, "'vars:' must come before forms");
      Polynomial p;
      try {
        p = parse_polynomial(value, a.nvars);
      } catch (const PolyParseError& e) {
        throw ArrParseError(lineno, e.what());
      }
      if (p.is_zero()) throw ArrParseError(lineno, "zero form");
      LinearForm f;
      try {
        f = LinearForm::from_polynomial(p);
      } catch (const std::invalid_argument& e) {
        throw ArrParseError(lineno, e.what());
      }
      for (std::size_t k = 0; k < a.forms.size(); ++k)
        if (a.forms[k] == f)
          throw ArrParseError(lineno, "duplicate hyperplane (same as form " +
                                          std::to_string(k + 1) + ")");
      a.forms.push_back(std::move(f));
      a.mult.push_back(1);
    } else if (key == "mult") {
      if (a.forms.empty()) throw ArrParseError(lineno, "'mult:' before any form");
      int m;
      try {
        m = std::stoi(value);
      } catch (...) {
        throw ArrParseError(lineno, "bad multiplicity");
      }
      if (m < 0) throw ArrParseError(lineno, "negative multiplicity");
      a.mult.back() = m;
    } else {
      throw ArrParseError(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_vars) throw ArrParseError(lineno, "missing 'vars:' line");
  return a;
}

Arrangement parse_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArrParseError(0, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string serialize_arrangement(const Arrangement& a) {
  std::ostringstream out;
  out << "vars: " << a.nvars << "\n";
  for (int i = 0; i < a.size(); ++i) {
    out << "form: " << a.forms[i].to_string() << "\n";
    if (a.mult[i] != 1) out << "mult: " << a.mult[i] << "\n";
  }
  return out.str();
}

Polynomial defining_polynomial(const Arrangement& a) {
  Polynomial q = Polynomial::constant(a.nvars, 1);
  for (const auto& f : a.forms) q = q * f.to_polynomial();
  return q;
}

// ---------------------------------------------------------------------------
// Lattice

namespace {

int rank_of(const Arrangement& a, const std::vector<int>& hyps) {
  IntMatrix m;
  for (int h : hyps) m.push_back(a.forms[h].c);
  return rank_int(std::move(m));
}

} // namespace

Flat flat_closure(const Arrangement& a, const std::vector<int>& hyps) {
  Flat f;
  f.rank = rank_of(a, hyps);
  IntMatrix base;
  for (int h : hyps) base.push_back(a.forms[h].c);
  for (int j = 0; j < a.size(); ++j) {
    IntMatrix ext = base;
    ext.push_back(a.forms[j].c);
    if (rank_int(std::move(ext)) == f.rank) f.hyps.push_back(j);
  }
  return f;
}

std::vector<Flat> intersection_lattice(const Arrangement& a, int up_to_rank) {
  if (up_to_rank > a.nvars) throw std::invalid_argument("up_to_rank exceeds dimension");
  std::vector<Flat> flats;
  std::set<std::vector<int>> seen;
  Flat ambient;
  ambient.rank = 0;
  flats.push_back(ambient);
  seen.insert(ambient.hyps);
  std::size_t frontier_begin = 0;
  for (int r = 0; r < up_to_rank; ++r) {
    std::size_t frontier_end = flats.size();
    for (std::size_t fi = frontier_begin; fi < frontier_end; ++fi) {
      Flat base = flats[fi];
      for (int j = 0; j < a.size(); ++j) {
        if (std::binary_search(base.hyps.begin(), base.hyps.end(), j)) continue;
        std::vector<int> gen = base.hyps;
        gen.push_back(j);
        Flat f = flat_closure(a, gen);
        if (f.rank != base.rank + 1) continue;
        if (seen.insert(f.hyps).second) flats.push_back(std::move(f));
      }
    }
    frontier_begin = frontier_end;
  }
  return flats;
}

int flat_multiplicity(const Arrangement& a, int i, int j) {
  if (i < 0 || j < 0 || i >= a.size() || j >= a.size() || i == j)
    throw std::out_of_range("flat_multiplicity: bad indices");
  return static_cast<int>(flat_closure(a, {i, j}).hyps.size());
}

// ---------------------------------------------------------------------------
// Constructions

Deletion delete_hyperplanes(const Arrangement& a, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices)
    if (i < 0 || i >= a.size()) throw std::out_of_range("delete: index out of range");
  Deletion d;
  d.arr.nvars = a.nvars;
  d.old_to_new.assign(a.size(), -1);
  for (int i = 0; i < a.size(); ++i) {
    if (std::binary_search(indices.begin(), indices.end(), i)) continue;
    d.old_to_new[i] = static_cast<int>(d.arr.forms.size());
    d.new_to_old.push_back(i);
    d.arr.forms.push_back(a.forms[i]);
    d.arr.mult.push_back(a.mult[i]);
  }
  return d;
}

Restriction euler_restriction(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size()) throw std::out_of_range("restriction: index out of range");
  const LinearForm& alpha = a.forms[i];
  int pivot = 0;
  while (sgn(alpha.c[pivot]) == 0) ++pivot;
  Restriction r;
  r.pivot = pivot;
  r.arr.nvars = a.nvars - 1;
  r.image.assign(a.size(), -1);
  for (int j = 0; j < a.size(); ++j) {
    if (j == i) continue;
    const LinearForm& beta = a.forms[j];
    std::vector<Rat> gamma;
    gamma.reserve(a.nvars - 1);
    for (int k = 0; k < a.nvars; ++k) {
      if (k == pivot) continue;
      gamma.emplace_back(alpha.c[pivot] * beta.c[k] - beta.c[pivot] * alpha.c[k]);
    }
    LinearForm img = LinearForm::from_rationals(std::move(gamma));
    int found = -1;
    for (std::size_t k = 0; k < r.arr.forms.size(); ++k)
      if (r.arr.forms[k] == img) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(r.arr.forms.size());
      r.arr.forms.push_back(std::move(img));
      r.arr.mult.push_back(1);
    }
    r.image[j] = found;
  }
  return r;
}

Arrangement ziegler_restriction(const Arrangement& a, int i) {
  Restriction r = euler_restriction(a, i);
  Arrangement z = r.arr;
  std::fill(z.mult.begin(), z.mult.end(), 0);
  for (int j = 0; j < a.size(); ++j)
    if (j != i) z.mult[r.image[j]] += 1;
  return z;
}

Arrangement localization(const Arrangement& a, const Flat& flat) {
  Arrangement loc;
  loc.nvars = a.nvars;
  for (int h : flat.hyps) {
    if (h < 0 || h >= a.size()) throw std::out_of_range("localization: bad flat");
    loc.forms.push_back(a.forms[h]);
    loc.mult.push_back(a.mult[h]);
  }
  return loc;
}

Polynomial eliminate_modulo(const Polynomial& p, const LinearForm& alpha) {
  int n = alpha.nvars();
  int pivot = 0;
  while (sgn(alpha.c[pivot]) == 0) ++pivot;
  // x_pivot := -(sum_{k != pivot} c_k x_k) / c_pivot
  std::vector<Term> raw;
  for (int k = 0; k < n; ++k) {
    if (k == pivot || sgn(alpha.c[k]) == 0) continue;
    Rat q(-alpha.c[k], alpha.c[pivot]);
    q.canonicalize();
    raw.push_back({Monomial::var(n, k), q});
  }
  Polynomial repl = Polynomial::from_terms(n, std::move(raw));
  return p.substitute(pivot, repl).drop_variable(pivot);
}

Arrangement change_coordinates(const Arrangement& a,
                               const std::vector<std::vector<Int>>& m) {
  Arrangement b;
  b.nvars = a.nvars;
  b.mult = a.mult;
  for (const auto& f : a.forms) {
    std::vector<Rat> c(a.nvars, Rat(0));
    // alpha(M x): coefficient vector is M^T * c
    for (int j = 0; j < a.nvars; ++j)
      for (int k = 0; k < a.nvars; ++k) c[j] += Rat(m[k][j] * f.c[k]);
    b.forms.push_back(LinearForm::from_rationals(std::move(c)));
  }
  return b;
}

} // namespace arr
