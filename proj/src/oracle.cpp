#include "arr/oracle.hpp"

#include <algorithm>
#include <map>

#include "arr/exactlinalg.hpp"

namespace arr {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(nvars);
  m.deg = static_cast<std::uint16_t>(d);
  // enumerate exponent tuples summing to d
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[i] = left;
      for (int k = 0; k < nvars; ++k) m.e[k] = static_cast<std::uint16_t>(e[k]);
      out.push_back(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) > 0; });
  return out;
}

namespace {

struct MonoCmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_cmp(a, b) > 0;
  }
};

// Constraint matrix of the degree-d slice: one block of columns per
// derivation component, one block of rows per hyperplane. Integer entries.
IntMatrix slice_constraints(const Arrangement& am, int d, int* ncols_out) {
  const int l = am.nvars;
  auto monos = monomials_of_degree(l, d);
  const int nd = static_cast<int>(monos.size());
  const int ncols = l * nd;
  if (ncols_out) *ncols_out = ncols;
  IntMatrix rows;

  for (int h = 0; h < am.size(); ++h) {
    const int m = am.mult[h];
    if (m == 0) continue;
    const LinearForm& alpha = am.forms[h];
    std::map<Monomial, int, MonoCmp> row_index;
    std::vector<std::vector<std::pair<int, Rat>>> rem_of_mono(nd);
    if (m == 1) {
      // Substitute the pivot solve of alpha = 0; scaled by c_p^d to stay
      // integral. theta(alpha) vanishes on H iff every substituted
      // coefficient vanishes.
      int p = 0;
      while (sgn(alpha.c[p]) == 0) ++p;
      Polynomial repl(l);
      {
        std::vector<Term> raw;
        for (int k = 0; k < l; ++k)
          if (k != p && sgn(alpha.c[k]) != 0)
            raw.push_back({Monomial::var(l, k), Rat(-alpha.c[k])});
        repl = Polynomial::from_terms(l, std::move(raw));
      }
      std::vector<Polynomial> rpow(d + 1, Polynomial::constant(l, 1));
      for (int k = 1; k <= d; ++k) rpow[k] = rpow[k - 1] * repl;
      std::vector<Rat> cpow(d + 1, Rat(1));
      for (int k = 1; k <= d; ++k) cpow[k] = cpow[k - 1] * Rat(alpha.c[p]);
      for (int a = 0; a < nd; ++a) {
        int ap = monos[a].e[p];
        Monomial rest = monos[a];
        rest.deg = static_cast<std::uint16_t>(rest.deg - ap);
        rest.e[p] = 0;
        Polynomial sub = rpow[ap].mul_term(rest, cpow[d - ap]);
        for (const auto& t : sub.terms()) {
          auto [it, fresh] = row_index.try_emplace(t.mono, static_cast<int>(row_index.size()));
          rem_of_mono[a].emplace_back(it->second, t.coef);
        }
      }
    } else {
      // Remainder of the exact division by alpha^m; any fixed division
      // yields the same solution set.
      Polynomial g = alpha.to_polynomial().pow(m);
      for (int a = 0; a < nd; ++a) {
        Polynomial xa = Polynomial::term(l, monos[a], Rat(1));
        Polynomial rem = divrem(xa, g).second;
        for (const auto& t : rem.terms()) {
          auto [it, fresh] = row_index.try_emplace(t.mono, static_cast<int>(row_index.size()));
          rem_of_mono[a].emplace_back(it->second, t.coef);
        }
      }
    }
    // Assemble rational rows, then clear denominators per row.
    std::vector<std::vector<Rat>> hrows(row_index.size(), std::vector<Rat>(ncols, Rat(0)));
    for (int i = 0; i < l; ++i) {
      if (sgn(alpha.c[i]) == 0) continue;
      Rat ci(alpha.c[i]);
      for (int a = 0; a < nd; ++a)
        for (const auto& [ridx, coef] : rem_of_mono[a]) hrows[ridx][i * nd + a] += ci * coef;
    }
    for (auto& row : hrows) {
      Int den = 1, g = 0;
      for (const auto& q : row)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      std::vector<Int> irow(ncols);
      for (int c = 0; c < ncols; ++c) {
        Rat q = row[c] * Rat(den);
        irow[c] = q.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), irow[c].get_mpz_t());
      }
      if (g > 1)
        for (auto& z : irow) z /= g;
      if (g != 0) rows.push_back(std::move(irow));
    }
  }
  return rows;
}

ModuleVector vector_from_coords(const std::vector<Int>& u, int l,
                                const std::vector<Monomial>& monos) {
  const int nd = static_cast<int>(monos.size());
  ModuleVector theta(l, l);
  for (int i = 0; i < l; ++i) {
    std::vector<Term> raw;
    for (int a = 0; a < nd; ++a)
      if (sgn(u[i * nd + a]) != 0) raw.push_back({monos[a], Rat(u[i * nd + a])});
    theta[i] = Polynomial::from_terms(l, std::move(raw));
  }
  return theta;
}

} // namespace

DegreeSlice dim_slice(const Arrangement& am, int d) {
  if (d < 0) throw std::invalid_argument("dim_slice: negative degree");
  DegreeSlice slice;
  slice.degree = d;
  int ncols = 0;
  IntMatrix rows = slice_constraints(am, d, &ncols);
  auto monos = monomials_of_degree(am.nvars, d);
  auto kernel = kernel_basis_int(rows, ncols);
  slice.dimension = static_cast<int>(kernel.size());
  for (const auto& u : kernel) slice.basis.push_back(vector_from_coords(u, am.nvars, monos));
  return slice;
}

int dim_slice_dimension(const Arrangement& am, int d) {
  int ncols = 0;
  IntMatrix rows = slice_constraints(am, d, &ncols);
  return ncols - rank_int(std::move(rows));
}

std::map<int, int> generator_counts(const Arrangement& am, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("generator_counts: negative degree");
  std::map<int, int> counts;
  const int l = am.nvars;
  DegreeSlice prev;
  for (int d = 0; d <= max_degree; ++d) {
    DegreeSlice cur = dim_slice(am, d);
    int spanned = 0;
    if (d == 0) {
      spanned = 0;
    } else if (!prev.basis.empty()) {
      auto monos = monomials_of_degree(l, d);
      std::map<Monomial, int, MonoCmp> idx;
      for (int a = 0; a < static_cast<int>(monos.size()); ++a) idx.emplace(monos[a], a);
      const int nd = static_cast<int>(monos.size());
      IntMatrix span;
      for (const auto& b : prev.basis)
        for (int k = 0; k < l; ++k) {
          std::vector<Int> row(l * nd, Int(0));
          for (int i = 0; i < l; ++i)
            for (const auto& t : b[i].terms()) {
              Monomial m = t.mono * Monomial::var(l, k);
              row[i * nd + idx.at(m)] = t.coef.get_num(); // basis entries are integers
            }
          span.push_back(std::move(row));
        }
      spanned = rank_int(std::move(span));
    }
    int fresh = cur.dimension - spanned;
    if (fresh != 0) counts[d] = fresh;
    prev = std::move(cur);
  }
  return counts;
}

bool free_hilbert_dim_check(const Arrangement& am, const DerivationModule& dm, int d) {
  const int l = am.nvars;
  if (static_cast<int>(dm.ds.size()) != l) return false;
  // Lower bound: monomial multiples of the basis are independent elements of
  // the slice once the basis is S-independent (Saito) and each generator
  // satisfies the divisibility conditions exactly.
  if (!saito_determinant_check(dm)) return false;
  for (const auto& g : dm.gens)
    if (!derivation_in_module(g, am)) return false;
  long expected = 0;
  for (int di : dm.ds) {
    int k = d - di;
    if (k < 0) continue;
    // #monomials of degree k in l variables
    long binom = 1;
    for (int t = 1; t <= l - 1; ++t) binom = binom * (k + t) / t;
    expected += binom;
  }
  // Upper bound: nullity over Z/p bounds the rational nullity from above.
  int ncols = 0;
  IntMatrix rows = slice_constraints(am, d, &ncols);
  int nullity_p = ncols - rank_mod_p(rows, ncols, kCertPrime);
  return nullity_p == static_cast<long>(expected);
}

} // namespace arr
