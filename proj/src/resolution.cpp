#include "arr/resolution.hpp"

#include <algorithm>

namespace arr {

std::vector<int> FreeResolution::shifts_at(int j) const {
  std::vector<int> s;
  if (j == 0) s = m0.ds;
  else if (j >= 1 && j <= pd()) s = steps[j - 1].shifts;
  std::sort(s.begin(), s.end());
  return s;
}

FreeResolution minimal_free_resolution(const DerivationModule& dm) {
  FreeResolution res;
  res.m0 = dm;
  FreeModule cur_module = dm.der;
  std::vector<ModuleVector> cur_gens = dm.gens;
  while (!cur_gens.empty()) {
    SyzygyResult syz = syzygies(cur_module, cur_gens);
    std::vector<ModuleVector> minimized = min_generators(syz.module, syz.generators);
    if (minimized.empty()) break;
    ResolutionStep step;
    for (const auto& row : minimized) {
      // Minimality: a nonzero constant entry would mean the previous step's
      // generating set was not minimal.
      for (const auto& entry : row.components())
        if (!entry.is_zero() && entry.is_constant())
          throw std::logic_error("non-minimal differential entry");
      step.shifts.push_back(row.degree(syz.module));
    }
    step.differential = std::move(minimized);
    res.steps.push_back(step);
    cur_module = syz.module;
    cur_gens = res.steps.back().differential;
  }
  return res;
}

FreeResolution minimal_free_resolution(const Arrangement& am) {
  return minimal_free_resolution(derivation_module(am));
}

BettiTable betti_table(const FreeResolution& res) {
  BettiTable b;
  for (int d : res.m0.ds) b[0][d] += 1;
  for (int j = 1; j <= res.pd(); ++j)
    for (int d : res.steps[j - 1].shifts) b[j][d] += 1;
  return b;
}

int projective_dimension(const FreeResolution& res) { return res.pd(); }

bool euler_characteristic_check(const FreeResolution& res, const Arrangement& am) {
  long sum = 0;
  int sgn = 1;
  for (int j = 0; j <= res.pd(); ++j) {
    for (int d : res.shifts_at(j)) sum += sgn * d;
    sgn = -sgn;
  }
  return sum == am.weight();
}

namespace {

// Multiset difference a minus b; nullopt when b is not contained in a.
std::optional<std::vector<int>> multiset_minus(std::vector<int> a, const std::vector<int>& b) {
  std::sort(a.begin(), a.end());
  for (int x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end()) return std::nullopt;
    a.erase(it);
  }
  return a;
}

// A level element of D(A') of degree `level` outside D(A), when one exists
// among the minimal generators.
std::optional<ModuleVector> pick_level_element(const DerivationModule& deletion,
                                               const GroebnerBasis& gb_parent, int level) {
  for (const auto& g : deletion.gens) {
    if (g.degree(deletion.der) != level) continue;
    if (!gb_parent.contains(g)) return g;
  }
  return std::nullopt;
}

} // namespace

Thm38Report thm38_structure_check(const Arrangement& a, int i, int j,
                                  const FreeResolution& res_a12) {
  const int l = a.nvars;
  DerivationModule da = derivation_module(a);
  if (static_cast<int>(da.ds.size()) != l)
    throw std::invalid_argument("thm38_structure_check: A is not free");
  DerivationModule di = derivation_module(delete_hyperplanes(a, {i}).arr);
  DerivationModule dj = derivation_module(delete_hyperplanes(a, {j}).arr);
  if (static_cast<int>(di.ds.size()) == l || static_cast<int>(dj.ds.size()) == l)
    throw std::invalid_argument("thm38_structure_check: a single deletion is free");
  const std::vector<int>& ds12 = res_a12.m0.ds;
  if (static_cast<int>(ds12.size()) <= l + 2)
    throw std::invalid_argument("thm38_structure_check: |DS| <= l + 2");

  Thm38Report rep;
  rep.r = static_cast<int>(ds12.size()) - l;
  auto rest = multiset_minus(ds12, da.ds);
  rep.ds_contains_exponents = rest.has_value();
  if (rest) rep.levels = *rest;

  // Sort the two deleted hyperplanes so that side 1 carries the smaller level.
  auto level_of = [&](const DerivationModule& d) {
    auto extra = multiset_minus(d.ds, da.ds);
    return (extra && extra->size() == 1) ? (*extra)[0] : -1;
  };
  int ci = level_of(di), cj = level_of(dj);
  int h1 = i, h2 = j, c1 = ci, c2 = cj;
  const DerivationModule* d1 = &di;
  const DerivationModule* d2 = &dj;
  if (cj < ci) {
    std::swap(h1, h2);
    std::swap(c1, c2);
    std::swap(d1, d2);
  }

  // M_1 contains (strictly) one shift c_k + 1 per extra generator degree.
  std::vector<int> m1 = res_a12.shifts_at(1);
  std::vector<int> levels_plus_one = rep.levels;
  for (int& d : levels_plus_one) d += 1;
  auto extra_m1 = multiset_minus(m1, levels_plus_one);
  rep.m1_contains_levels_plus_one = extra_m1.has_value();
  rep.t = extra_m1 ? static_cast<int>(extra_m1->size()) : 0;
  rep.m1_strictly_larger = extra_m1 && !extra_m1->empty();

  // Membership patterns of the first differential's guaranteed rows.
  GroebnerBasis gb_a(da.der, da.gens);
  auto phi1 = pick_level_element(*d1, gb_a, c1);
  auto phi2 = pick_level_element(*d2, gb_a, c2);
  Polynomial alpha1 = a.forms[h1].to_polynomial();
  Polynomial alpha2 = a.forms[h2].to_polynomial();
  if (phi1 && phi2) {
    rep.memb_alpha1_phi1 = gb_a.contains(phi1->mul_poly(alpha1));
    rep.memb_alpha2_phi2 = gb_a.contains(phi2->mul_poly(alpha2));
    // Extend {theta, phi1, phi2} to a minimal generating set; the additions
    // are the extra generators phi_k.
    std::vector<ModuleVector> chosen = da.gens;
    chosen.push_back(*phi1);
    chosen.push_back(*phi2);
    std::vector<ModuleVector> extras;
    {
      GroebnerBasis gb(da.der, chosen);
      std::vector<ModuleVector> pool = res_a12.m0.gens;
      std::stable_sort(pool.begin(), pool.end(), [&](const auto& x, const auto& y) {
        return x.degree(da.der) < y.degree(da.der);
      });
      for (const auto& g : pool) {
        if (static_cast<int>(chosen.size()) == static_cast<int>(ds12.size())) break;
        GroebnerBasis cur(da.der, chosen);
        if (cur.contains(g)) continue;
        chosen.push_back(g);
        extras.push_back(g);
      }
    }
    std::vector<ModuleVector> theta_phi1 = da.gens;
    theta_phi1.push_back(*phi1);
    GroebnerBasis gb_tp(da.der, theta_phi1);
    rep.memb_alpha2_phik = true;
    for (const auto& g : extras)
      if (!gb_tp.contains(g.mul_poly(alpha2))) rep.memb_alpha2_phik = false;
  }

  // M_2 against the predicted extra shifts {e_i + 1}.
  std::vector<int> m2 = res_a12.shifts_at(2);
  if (extra_m1) {
    std::vector<int> predicted = *extra_m1;
    for (int& d : predicted) d += 1;
    std::sort(predicted.begin(), predicted.end());
    rep.m2_matches_extra_shifts = (m2 == predicted);
    if (rep.m2_matches_extra_shifts) {
      rep.t_equals_r_minus_2 = (rep.t == rep.r - 2);
      rep.m3_zero = res_a12.pd() <= 2;
    }
  }
  return rep;
}

} // namespace arr
