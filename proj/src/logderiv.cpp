#include "arr/logderiv.hpp"

#include <algorithm>

namespace arr {

Polynomial apply_derivation(const ModuleVector& theta, const Polynomial& f) {
  Polynomial r(f.nvars());
  for (int i = 0; i < theta.rank(); ++i)
    if (!theta[i].is_zero()) r += theta[i] * f.partial(i);
  return r;
}

bool derivation_in_module(const ModuleVector& theta, const Arrangement& am) {
  for (int h = 0; h < am.size(); ++h) {
    if (am.mult[h] == 0) continue;
    Polynomial alpha = am.forms[h].to_polynomial();
    Polynomial val = apply_derivation(theta, alpha);
    Polynomial divisor = am.mult[h] == 1 ? alpha : alpha.pow(am.mult[h]);
    if (!divides_exactly(divisor, val)) return false;
  }
  return true;
}

RelationMatrix relation_matrix(const Arrangement& am) {
  const int l = am.nvars;
  RelationMatrix rm;
  std::vector<int> active;
  for (int h = 0; h < am.size(); ++h)
    if (am.mult[h] >= 1) active.push_back(h);
  const int n = static_cast<int>(active.size());
  std::vector<int> src_shifts(l, 0);
  for (int k = 0; k < n; ++k) src_shifts.push_back(am.mult[active[k]]);
  rm.source = FreeModule(l, std::move(src_shifts));
  rm.target = FreeModule::unshifted(l, n);
  for (int k = 0; k < n; ++k) {
    int h = active[k];
    ModuleVector row(l, l + n);
    for (int i = 0; i < l; ++i)
      row[i] = Polynomial::constant(l, Rat(am.forms[h].c[i]));
    Polynomial alpha = am.forms[h].to_polynomial();
    row[l + k] = -(am.mult[h] == 1 ? alpha : alpha.pow(am.mult[h]));
    rm.rows.push_back(std::move(row));
  }
  return rm;
}

namespace {

// Project kernel vectors of the relation matrix to derivations and extract a
// normalized minimal generating set.
std::vector<ModuleVector> project_and_minimize(const std::vector<ModuleVector>& kernel,
                                               int nvars) {
  std::vector<ModuleVector> ders;
  for (const auto& k : kernel) {
    std::vector<Polynomial> comps(k.components().begin(), k.components().begin() + nvars);
    ModuleVector theta(std::move(comps));
    if (!theta.is_zero()) ders.push_back(std::move(theta));
  }
  auto mg = min_generators(der_module(nvars), ders);
  for (auto& g : mg) g.normalize_content();
  return mg;
}

} // namespace

DerivationModule derivation_module(const Arrangement& am) {
  DerivationModule dm;
  dm.arr = am;
  dm.der = der_module(am.nvars);
  if (am.size() == 0 || *std::max_element(am.mult.begin(), am.mult.end()) == 0) {
    for (int i = 0; i < am.nvars; ++i)
      dm.gens.push_back(ModuleVector::unit(am.nvars, am.nvars, i));
  } else {
    RelationMatrix rm = relation_matrix(am);
    auto kernel = kernel_of_map(rm.source, rm.target, rm.rows);
    dm.gens = project_and_minimize(kernel, am.nvars);
  }
  for (const auto& g : dm.gens) dm.ds.push_back(g.degree(dm.der));
  std::sort(dm.ds.begin(), dm.ds.end());
  return dm;
}

std::vector<int> degree_sequence(const Arrangement& am) { return derivation_module(am).ds; }

ModuleVector euler_derivation(int nvars) {
  ModuleVector e(nvars, nvars);
  for (int i = 0; i < nvars; ++i) e[i] = Polynomial::variable(nvars, i);
  return e;
}

bool contains_euler(const DerivationModule& d) {
  return is_member(d.der, euler_derivation(d.arr.nvars), d.gens).member;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, std::vector<int> cols,
                    int row, int nvars) {
  if (cols.empty()) return Polynomial::constant(nvars, 1);
  Polynomial det(nvars);
  int s = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    if (!m[row][c].is_zero()) {
      std::vector<int> rest;
      for (int x : cols)
        if (x != c) rest.push_back(x);
      Polynomial term = m[row][c] * poly_det(m, rest, row + 1, nvars);
      det = s > 0 ? det + term : det - term;
    }
    s = -s;
  }
  return det;
}

} // namespace

bool saito_determinant_check(const DerivationModule& dm) {
  const int l = dm.arr.nvars;
  if (static_cast<int>(dm.gens.size()) != l) return false;
  std::vector<std::vector<Polynomial>> m;
  for (const auto& g : dm.gens) m.push_back(g.components());
  std::vector<int> cols(l);
  for (int i = 0; i < l; ++i) cols[i] = i;
  Polynomial det = poly_det(m, cols, 0, l);
  if (det.is_zero()) return false;
  Polynomial q = Polynomial::constant(l, 1);
  for (int h = 0; h < dm.arr.size(); ++h)
    q = q * dm.arr.forms[h].to_polynomial().pow(dm.arr.mult[h]);
  auto [quot, rem] = divrem(det, q);
  return rem.is_zero() && quot.is_constant() && !quot.is_zero();
}

std::vector<ModuleVector> euler_complement_module(const Arrangement& am, int i) {
  const int l = am.nvars;
  RelationMatrix rm = relation_matrix(am);
  const int n = static_cast<int>(rm.rows.size());
  // Extra target row forcing theta(alpha_i) = 0 exactly (no slack slot).
  ModuleVector extra(l, l + n);
  for (int k = 0; k < l; ++k) extra[k] = Polynomial::constant(l, Rat(am.forms[i].c[k]));
  rm.rows.push_back(std::move(extra));
  rm.target = FreeModule::unshifted(l, n + 1);
  auto kernel = kernel_of_map(rm.source, rm.target, rm.rows);
  return project_and_minimize(kernel, l);
}

ModuleVector restrict_derivation(const ModuleVector& theta, const Arrangement& a, int i) {
  if (!derivation_in_module(theta, a))
    throw std::invalid_argument("restrict_derivation: not in D(A)");
  Restriction r = euler_restriction(a, i);
  const LinearForm& alpha = a.forms[i];
  ModuleVector out(a.nvars - 1, a.nvars - 1);
  int slot = 0;
  for (int j = 0; j < a.nvars; ++j) {
    if (j == r.pivot) continue;
    out[slot++] = eliminate_modulo(theta[j], alpha);
  }
  return out;
}

ModuleVector ziegler_restrict_derivation(const ModuleVector& theta, const Arrangement& a,
                                         int i) {
  Polynomial alpha = a.forms[i].to_polynomial();
  if (!apply_derivation(theta, alpha).is_zero())
    throw std::invalid_argument("ziegler_restrict_derivation: theta(alpha_i) != 0");
  return restrict_derivation(theta, a, i);
}

std::string derivation_to_string(const ModuleVector& theta) {
  int d = theta.degree(der_module(theta.nvars()));
  std::string out = "deg=" + (d == kZeroDegree ? std::string("-inf") : std::to_string(d));
  out += "; [";
  for (int i = 0; i < theta.rank(); ++i) {
    if (i) out += ", ";
    out += theta[i].to_string();
  }
  out += "]";
  return out;
}

bool kernel_sum_equals(const Arrangement& a, int i, int j) {
  if (i == j) throw std::invalid_argument("kernel_sum_equals: need distinct indices");
  DerivationModule da = derivation_module(a);
  DerivationModule di = derivation_module(delete_hyperplanes(a, {i}).arr);
  DerivationModule dij = derivation_module(delete_hyperplanes(a, {i, j}).arr);
  Polynomial alpha_j = a.forms[j].to_polynomial();
  std::vector<ModuleVector> lhs = da.gens;
  for (const auto& g : dij.gens) lhs.push_back(g.mul_poly(alpha_j));
  return submodule_equal(da.der, lhs, di.gens);
}

bool jacobian_crosscheck(const Arrangement& a) {
  if (!a.is_simple()) throw std::invalid_argument("jacobian_crosscheck: simple only");
  const int l = a.nvars;
  Polynomial q = defining_polynomial(a);
  FreeModule tgt = FreeModule::unshifted(l, 1);
  std::vector<ModuleVector> gens;
  for (int i = 0; i < l; ++i) {
    ModuleVector v(l, 1);
    v[0] = q.partial(i);
    gens.push_back(std::move(v));
  }
  ModuleVector vq(l, 1);
  vq[0] = q;
  gens.push_back(std::move(vq));
  auto syz = syzygies(tgt, gens);
  std::vector<ModuleVector> proj;
  for (const auto& s : syz.generators) {
    std::vector<Polynomial> comps(s.components().begin(), s.components().begin() + l);
    ModuleVector theta(std::move(comps));
    if (!theta.is_zero()) proj.push_back(std::move(theta));
  }
  DerivationModule dm = derivation_module(a);
  return submodule_equal(der_module(l), proj, dm.gens);
}

} // namespace arr
