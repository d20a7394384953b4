#include "arr/classify.hpp"

#include <algorithm>

namespace arr {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Free: return "free";
    case Verdict::Spog: return "spog";
    default: return "other";
  }
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
      Polynomial sub = poly_det(m, rest, row + 1, nvars);
      Polynomial term = m[row][c] * sub;
      det = s > 0 ? det + term : det - term;
    }
    s = -s;
  }
  return det;
}

std::optional<std::vector<int>> multiset_minus(std::vector<int> a, const std::vector<int>& b) {
  std::sort(a.begin(), a.end());
  for (int x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end()) return std::nullopt;
    a.erase(it);
  }
  return a;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> with(std::vector<int> v, std::initializer_list<int> add) {
  for (int x : add) v.push_back(x);
  return sorted(std::move(v));
}

} // namespace

ClassificationReport classify_arrangement(const Arrangement& a) {
  ClassificationReport rep;
  rep.module = derivation_module(a);
  rep.res = minimal_free_resolution(rep.module);
  rep.ds = rep.module.ds;
  rep.pd = rep.res.pd();
  const int l = a.nvars;

  rep.checks["euler_characteristic"] = euler_characteristic_check(rep.res, a);
  rep.checks["pd_bound"] = rep.pd <= std::max(0, l - 2);
  if (a.is_simple() && !a.empty())
    rep.checks["ds_contains_1"] =
        std::find(rep.ds.begin(), rep.ds.end(), 1) != rep.ds.end();

  if (static_cast<int>(rep.ds.size()) == l) {
    rep.verdict = Verdict::Free;
    rep.exponents = rep.ds;
    rep.checks["saito_determinant"] = saito_determinant_check(rep.module);
    return rep;
  }
  if (rep.pd == 1 && static_cast<int>(rep.ds.size()) == l + 1 &&
      rep.res.steps[0].shifts.size() == 1) {
    int level = rep.res.steps[0].shifts[0] - 1;
    const ModuleVector& rel = rep.res.steps[0].differential[0];
    int slot = -1;
    for (int k = 0; k < rel.rank(); ++k) {
      if (rep.module.gens[k].degree(rep.module.der) != level) continue;
      if (rel[k].is_zero()) continue;
      slot = k;
      break;
    }
    if (slot >= 0) {
      rep.verdict = Verdict::Spog;
      rep.level = level;
      rep.level_slot = slot;
      rep.level_coefficient = LinearForm::from_polynomial(rel[slot]);
      std::vector<int> po = rep.ds;
      po.erase(std::find(po.begin(), po.end(), level));
      rep.po_exponents = po;
      long posum = 0;
      for (int d : po) posum += d;
      rep.checks["spog_degree_sum"] = (posum - 1 == a.weight());
      return rep;
    }
  }
  rep.verdict = Verdict::Other;
  return rep;
}

bool is_free(const Arrangement& a) {
  DerivationModule dm = derivation_module(a);
  if (static_cast<int>(dm.ds.size()) != a.nvars) return false;
  if (!saito_determinant_check(dm))
    throw std::logic_error("free count but Saito determinant failed");
  return true;
}

std::vector<int> exponents(const Arrangement& a) {
  DerivationModule dm = derivation_module(a);
  if (static_cast<int>(dm.ds.size()) != a.nvars)
    throw std::invalid_argument("exponents: arrangement is not free");
  return dm.ds;
}

NT1Report nt1_report(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size()) throw std::out_of_range("nt1: index out of range");
  ClassificationReport parent = classify_arrangement(a);
  if (parent.verdict != Verdict::Free)
    throw std::invalid_argument("nt1_report: arrangement is not free");
  const std::vector<int>& exp_a = parent.exponents;
  const int l = a.nvars;

  NT1Report rep;
  rep.i = i;
  Restriction restr = euler_restriction(a, i);
  rep.restriction_size = restr.arr.size();
  rep.deletion = classify_arrangement(delete_hyperplanes(a, {i}).arr);

  bool is_spog = rep.deletion.verdict == Verdict::Spog;
  bool is_free_del = rep.deletion.verdict == Verdict::Free;
  rep.case_tag = is_free_del ? "NT1-free" : (is_spog ? "NT1-spog" : "NT1-other");
  rep.checks["thm14_free_or_spog"] = is_free_del || is_spog;
  if (is_spog) {
    rep.checks["thm14_po_equals_exponents"] =
        sorted(rep.deletion.po_exponents) == sorted(exp_a);
    rep.checks["thm14_level_formula"] =
        rep.deletion.level == (a.size() - 1) - rep.restriction_size;
    if (l == 3) {
      int mx = *std::max_element(exp_a.begin(), exp_a.end());
      rep.checks["thm14_level_ge_max_exponent"] = rep.deletion.level >= mx;
    }
  }
  if (is_free_del) {
    // Addition-deletion: exp(A') = exp(A) with one d lowered by 1 and
    // exp(A^H) = exp(A) minus that d.
    ClassificationReport rc = classify_arrangement(restr.arr);
    bool ok = false;
    std::vector<int> seen;
    for (int d : exp_a) {
      if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
      seen.push_back(d);
      auto rest = multiset_minus(exp_a, {d});
      if (sorted(rep.deletion.exponents) == with(*rest, {d - 1}) &&
          rc.verdict == Verdict::Free && sorted(rc.exponents) == sorted(*rest)) {
        ok = true;
        break;
      }
    }
    rep.checks["addition_deletion_triple"] = ok;
  }
  return rep;
}

NT2Report nt2_report(const Arrangement& a, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= a.size() || j >= a.size())
    throw std::out_of_range("nt2: bad indices");
  ClassificationReport parent = classify_arrangement(a);
  if (parent.verdict != Verdict::Free)
    throw std::invalid_argument("nt2_report: arrangement is not free");
  const int l = a.nvars;

  NT2Report rep;
  rep.i = i;
  rep.j = j;
  rep.exp_a = parent.exponents;
  rep.parent = parent;

  Deletion del_i = delete_hyperplanes(a, {i});
  Deletion del_j = delete_hyperplanes(a, {j});
  ClassificationReport ci = classify_arrangement(del_i.arr);
  ClassificationReport cj = classify_arrangement(del_j.arr);

  if (ci.verdict == Verdict::Free || cj.verdict == Verdict::Free) {
    // One deletion free: A_{i,j} is NT-free-1 inside that deletion.
    rep.delegated = true;
    bool use_i = ci.verdict == Verdict::Free;
    const Deletion& base = use_i ? del_i : del_j;
    int other = use_i ? j : i;
    rep.delegate = nt1_report(base.arr, base.old_to_new[other]);
    rep.a12 = rep.delegate->deletion;
    rep.case_tag = rep.delegate->case_tag;
    rep.checks["thm15_pd_iff_ds"] =
        (rep.a12.pd <= 1) == (static_cast<int>(rep.a12.ds.size()) <= l + 2);
    rep.checks["cor313_free_needs_free_deletion"] = true; // one deletion is free
    return rep;
  }

  rep.checks["thm14_deletions_spog"] =
      ci.verdict == Verdict::Spog && cj.verdict == Verdict::Spog;
  rep.h1 = i;
  rep.h2 = j;
  int lvl_i = ci.level, lvl_j = cj.level;
  bool swapped = lvl_j < lvl_i;
  if (swapped) {
    std::swap(rep.h1, rep.h2);
    std::swap(lvl_i, lvl_j);
  }
  rep.c1 = lvl_i;
  rep.c2 = lvl_j;
  rep.a1 = swapped ? cj : ci;
  rep.a2 = swapped ? ci : cj;

  Deletion del_ij = delete_hyperplanes(a, {i, j});
  rep.a12 = classify_arrangement(del_ij.arr);
  rep.flat_mult = flat_multiplicity(a, i, j);
  rep.ker_sum_1 = kernel_sum_equals(a, rep.h1, rep.h2);
  rep.ker_sum_2 = kernel_sum_equals(a, rep.h2, rep.h1);

  const std::vector<int>& ds12 = rep.a12.ds;
  const int nds = static_cast<int>(ds12.size());

  // (C1) levels from the Thm 1.4 formula
  {
    Restriction r1 = euler_restriction(a, rep.h1);
    Restriction r2 = euler_restriction(a, rep.h2);
    rep.checks["thm14_level_formula"] =
        rep.c1 == (a.size() - 1) - r1.arr.size() && rep.c2 == (a.size() - 1) - r2.arr.size();
  }
  // (C2) Thm 1.5
  rep.checks["thm15_pd_iff_ds"] = (rep.a12.pd <= 1) == (nds <= l + 2);

  // (C3) three-dimensional shapes of Thm 1.6
  if (l == 3) {
    std::vector<int> m0 = rep.a12.res.shifts_at(0);
    std::vector<int> m1 = rep.a12.res.shifts_at(1);
    bool shape_ok = false;
    if (rep.flat_mult == 2) {
      rep.case_tag = "NT2-case1";
      shape_ok = rep.a12.pd == 1 && m1 == sorted({rep.c1 + 1, rep.c2 + 1}) &&
                 m0 == with(rep.exp_a, {rep.c1, rep.c2});
    } else if (rep.c1 == rep.c2) {
      rep.case_tag = "NT2-case2.1";
      shape_ok = rep.a12.pd == 1 && m1 == sorted({rep.c1 + 1}) &&
                 m0 == with(rep.exp_a, {rep.c1 - 1});
    } else {
      rep.case_tag = "NT2-case2.2";
      shape_ok = rep.a12.pd == 1 && m1 == sorted({rep.c1 + 1, rep.c2}) &&
                 m0 == with(rep.exp_a, {rep.c1, rep.c2 - 1});
    }
    rep.checks["thm16_shape"] = shape_ok;
    // (C4) SPOG iff c1 = c2 = max exponent (with |A_{H1 cap H2}| > 2)
    int mx = *std::max_element(rep.exp_a.begin(), rep.exp_a.end());
    bool spog_expected = rep.flat_mult > 2 && rep.c1 == rep.c2 && rep.c1 == mx;
    rep.checks["thm16_spog_iff_levels_max"] =
        (rep.a12.verdict == Verdict::Spog) == spog_expected;
    // (C5)
    rep.checks["thm16_not_free"] = rep.a12.verdict != Verdict::Free;
  }

  // (C6) large-|DS| structure
  if (l >= 4 && nds > l + 2) {
    rep.case_tag = "NT2-large";
    rep.thm38 = thm38_structure_check(a, i, j, rep.a12.res);
    rep.checks["thm38_structure"] = rep.thm38->consistent();
  }

  // (C7) Thm 3.7 case selectors vs the computed resolution
  {
    bool selector_ok = true;
    if (rep.ker_sum_1)
      selector_ok = rep.c1 == rep.c2 && rep.ker_sum_2 && rep.flat_mult > 2;
    if (nds > l + 2 && (rep.ker_sum_1 || rep.ker_sum_2)) selector_ok = false;
    if (nds <= l + 2) {
      std::vector<int> m0 = rep.a12.res.shifts_at(0);
      std::vector<int> m1 = rep.a12.res.shifts_at(1);
      std::vector<int> pm0, pm1;
      int thmcase = 0;
      if (rep.ker_sum_1) {
        thmcase = 1;
        pm1 = sorted({rep.c1 + 1});
        pm0 = with(rep.exp_a, {rep.c1 - 1});
      } else if (rep.ker_sum_2 && nds == l + 2) {
        thmcase = 2;
        pm1 = sorted({rep.c1 + 1, rep.c2});
        pm0 = with(rep.exp_a, {rep.c1, rep.c2 - 1});
      } else if (rep.ker_sum_2 && nds == l + 1) {
        thmcase = 3;
        auto rest = multiset_minus(rep.exp_a, {rep.c2});
        if (rest) {
          pm1 = sorted({rep.c1 + 1});
          pm0 = with(*rest, {rep.c1, rep.c2 - 1});
        } else {
          selector_ok = false;
        }
      } else {
        thmcase = 4;
        pm1 = sorted({rep.c1 + 1, rep.c2 + 1});
        pm0 = with(rep.exp_a, {rep.c1, rep.c2});
      }
      if (selector_ok && !pm0.empty())
        selector_ok = rep.a12.pd == 1 && m0 == pm0 && m1 == pm1;
      if (l != 3) rep.case_tag = "NT2-thm37-" + std::to_string(thmcase);
    }
    rep.checks["thm37_case_selector"] = selector_ok;
  }

  // (C8) Cor 3.14
  if (rep.a12.verdict == Verdict::Spog) {
    std::vector<int> tail(rep.exp_a.begin() + 1, rep.exp_a.end());
    rep.checks["cor314_c2_is_exponent"] =
        std::find(tail.begin(), tail.end(), rep.c2) != tail.end();
  }
  // (C9) Cor 3.13 contrapositive: with both deletions non-free, A12 not free
  rep.checks["cor313_free_needs_free_deletion"] = rep.a12.verdict != Verdict::Free;
  return rep;
}

FreeAdditionReport free_addition_candidate(const Arrangement& a,
                                           const ClassificationReport& c) {
  if (c.verdict != Verdict::Spog)
    throw std::invalid_argument("free_addition_candidate: arrangement is not SPOG");
  for (int d : c.po_exponents)
    if (c.level <= d)
      throw std::invalid_argument(
          "free_addition_candidate: level must exceed every PO-exponent");
  FreeAdditionReport rep;
  rep.candidate = *c.level_coefficient;
  Arrangement u = a;
  rep.already_present = false;
  for (const auto& f : a.forms)
    if (f == rep.candidate) rep.already_present = true;
  if (!rep.already_present) {
    u.forms.push_back(rep.candidate);
    u.mult.push_back(1);
  }
  DerivationModule dm = derivation_module(u);
  rep.addition_free = static_cast<int>(dm.ds.size()) == u.nvars;
  if (rep.addition_free) rep.addition_exponents = dm.ds;
  return rep;
}

// ---------------------------------------------------------------------------
// Lattice comparison

namespace {

std::vector<std::vector<int>> rank2_flats(const Arrangement& a) {
  std::vector<std::vector<int>> flats;
  for (const auto& f : intersection_lattice(a, 2))
    if (f.rank == 2) flats.push_back(f.hyps);
  std::sort(flats.begin(), flats.end());
  return flats;
}

bool backtrack(int depth, int n, const std::vector<std::vector<int>>& size_b,
               const std::vector<std::vector<int>>& size_c,
               const std::vector<std::vector<int>>& fp_b,
               const std::vector<std::vector<int>>& fp_c, std::vector<int>& map,
               std::vector<bool>& used) {
  if (depth == n) return true;
  for (int img = 0; img < n; ++img) {
    if (used[img] || fp_b[depth] != fp_c[img]) continue;
    bool ok = true;
    for (int k = 0; k < depth && ok; ++k)
      if (size_b[depth][k] != size_c[img][map[k]]) ok = false;
    if (!ok) continue;
    map[depth] = img;
    used[img] = true;
    if (backtrack(depth + 1, n, size_b, size_c, fp_b, fp_c, map, used)) return true;
    used[img] = false;
  }
  return false;
}

} // namespace

LatticeIsoReport lattice_isomorphic(const Arrangement& b, const Arrangement& c) {
  LatticeIsoReport rep;
  const int n = b.size();
  if (n != c.size() || b.nvars != c.nvars) return rep;
  auto flats_b = rank2_flats(b);
  auto flats_c = rank2_flats(c);
  if (flats_b.size() != flats_c.size()) return rep;

  auto pair_sizes = [n](const Arrangement& a) {
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s[i][j] = flat_multiplicity(a, i, j);
    return s;
  };
  auto fingerprints = [&](const std::vector<std::vector<int>>& flats) {
    std::vector<std::vector<int>> fp(n);
    for (const auto& f : flats)
      for (int h : f) fp[h].push_back(static_cast<int>(f.size()));
    for (auto& v : fp) std::sort(v.begin(), v.end());
    return fp;
  };
  auto size_b = pair_sizes(b), size_c = pair_sizes(c);
  auto fp_b = fingerprints(flats_b), fp_c = fingerprints(flats_c);

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (!backtrack(0, n, size_b, size_c, fp_b, fp_c, map, used)) return rep;

  // Final verification: the bijection carries rank-2 flats onto rank-2 flats.
  std::vector<std::vector<int>> mapped;
  for (auto f : flats_b) {
    for (int& h : f) h = map[h];
    std::sort(f.begin(), f.end());
    mapped.push_back(std::move(f));
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != flats_c) return rep;
  rep.isomorphic = true;
  rep.bijection = map;
  return rep;
}

CombinatoricsDemo combinatorics_vs_geometry(const Arrangement& b, const Arrangement& c) {
  CombinatoricsDemo demo;
  demo.iso = lattice_isomorphic(b, c);
  demo.ds_b = degree_sequence(b);
  demo.ds_c = degree_sequence(c);
  demo.ds_equal = demo.ds_b == demo.ds_c;
  auto sizes = [](const Arrangement& a) {
    std::vector<int> s;
    for (const auto& f : rank2_flats(a)) s.push_back(static_cast<int>(f.size()));
    std::sort(s.begin(), s.end());
    return s;
  };
  demo.flat_sizes_b = sizes(b);
  demo.flat_sizes_c = sizes(c);
  demo.flat_sizes_equal = demo.flat_sizes_b == demo.flat_sizes_c;
  return demo;
}

} // namespace arr
