#include "arr/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arr {

namespace {

struct Element {
  ModuleVector vec;
  ModTerm lt;
  Rat lc;
  int deg = 0;
  bool single = false; // supported in a single component
  std::vector<Polynomial> rep;
};

bool is_single_component(const ModuleVector& v) {
  int nz = 0;
  for (int i = 0; i < v.rank(); ++i)
    if (!v[i].is_zero()) ++nz;
  return nz == 1;
}

struct Pair {
  int deg;
  int j;
  int i;
  Monomial lcm_mono;
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

// Shared Buchberger engine. Inputs stay in the basis for the whole run (no
// deletions), so zero reductions of S-pairs yield syzygies of the inputs
// directly through the tracked representations.
class Engine {
 public:
  Engine(const FreeModule& fm, bool track_reps, bool collect_syzygies, bool prune)
      : fm_(fm), track_(track_reps || collect_syzygies), collect_(collect_syzygies),
        prune_(prune) {}

  int add_input(const ModuleVector& g) {
    int idx = ninputs_++;
    if (track_) {
      for (auto& e : els_) e.rep.emplace_back(fm_.nvars);
      for (auto& z : syz_) z.emplace_back(fm_.nvars);
    }
    if (g.is_zero()) {
      if (collect_) {
        std::vector<Polynomial> unit(ninputs_, Polynomial(fm_.nvars));
        unit[idx] = Polynomial::constant(fm_.nvars, 1);
        syz_.push_back(std::move(unit));
      }
      return idx;
    }
    std::vector<Polynomial> rep;
    if (track_) {
      rep.assign(ninputs_, Polynomial(fm_.nvars));
      rep[idx] = Polynomial::constant(fm_.nvars, 1);
    }
    append_element(g, std::move(rep));
    return idx;
  }

  void complete() {
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      process_pair(pr);
    }
  }

  const FreeModule& fm() const { return fm_; }
  const std::vector<Element>& elements() const { return els_; }
  std::vector<std::vector<Polynomial>> take_syzygies() { return std::move(syz_); }
  int ninputs() const { return ninputs_; }

  // Full normal form; optionally accumulates v = nf + sum quota[e]*els[e].
  ModuleVector reduce(ModuleVector v, std::vector<Polynomial>* quota) const {
    ModuleVector rem(fm_.nvars, fm_.rank());
    if (quota) quota->assign(els_.size(), Polynomial(fm_.nvars));
    while (true) {
      const Rat* lc = nullptr;
      auto lt = v.leading(&lc);
      if (!lt) break;
      int e = find_reducer(*lt);
      if (e >= 0) {
        Monomial m = lt->mono / els_[e].lt.mono;
        Rat c = *lc / els_[e].lc;
        v.sub_mul_term(els_[e].vec, m, c);
        if (quota) (*quota)[e] = (*quota)[e] + Polynomial::term(fm_.nvars, m, c);
      } else {
        // Move the irreducible leading term to the remainder.
        Polynomial t = Polynomial::term(fm_.nvars, lt->mono, *lc);
        rem[lt->pos] = rem[lt->pos] + t;
        v[lt->pos] = v[lt->pos] - t;
      }
    }
    return rem;
  }

 private:
  FreeModule fm_;
  bool track_;
  bool collect_;
  bool prune_;
  int ninputs_ = 0;
  std::vector<Element> els_;
  std::set<Pair> pairs_;
  std::vector<std::vector<Polynomial>> syz_;

  int find_reducer(const ModTerm& t) const {
    for (std::size_t e = 0; e < els_.size(); ++e)
      if (els_[e].lt.pos == t.pos && els_[e].lt.mono.divides(t.mono))
        return static_cast<int>(e);
    return -1;
  }

  void append_element(ModuleVector v, std::vector<Polynomial> rep) {
    Rat f = v.normalize_content();
    if (track_)
      for (auto& p : rep) p = p.scaled(f);
    Element el;
    el.vec = std::move(v);
    const Rat* lc = nullptr;
    el.lt = *el.vec.leading(&lc);
    el.lc = *lc;
    el.deg = el.vec.degree(fm_);
    el.single = is_single_component(el.vec);
    el.rep = std::move(rep);
    int t = static_cast<int>(els_.size());
    els_.push_back(std::move(el));
    update_pairs(t);
  }

  void record_syzygy(std::vector<Polynomial> z) {
    bool nonzero = false;
    for (const auto& p : z)
      if (!p.is_zero()) nonzero = true;
    if (nonzero) syz_.push_back(std::move(z));
  }

  // Gebauer-Moeller update for a freshly appended element t.
  void update_pairs(int t) {
    const Element& ht = els_[t];
    struct Cand {
      int i;
      Monomial lcm_mono;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (els_[i].lt.pos != ht.lt.pos) continue;
      cands.push_back({i, lcm(els_[i].lt.mono, ht.lt.mono), true});
    }
    if (prune_) {
      // B criterion: discard old pairs whose lcm is strictly covered by t.
      for (auto it = pairs_.begin(); it != pairs_.end();) {
        const Element& hi = els_[it->i];
        if (hi.lt.pos == ht.lt.pos && ht.lt.mono.divides(it->lcm_mono) &&
            lcm(els_[it->i].lt.mono, ht.lt.mono) != it->lcm_mono &&
            lcm(els_[it->j].lt.mono, ht.lt.mono) != it->lcm_mono) {
          it = pairs_.erase(it);
        } else {
          ++it;
        }
      }
      // M criterion: drop candidates whose lcm is a proper multiple of
      // another candidate's lcm.
      for (auto& a : cands)
        for (const auto& b : cands) {
          if (!a.alive || a.i == b.i) continue;
          if (b.lcm_mono.divides(a.lcm_mono) && b.lcm_mono != a.lcm_mono) {
            a.alive = false;
            break;
          }
        }
      // F criterion: keep one candidate per lcm value.
      for (std::size_t x = 0; x < cands.size(); ++x)
        for (std::size_t y = 0; y < x; ++y) {
          if (!cands[x].alive || !cands[y].alive) continue;
          if (cands[x].lcm_mono == cands[y].lcm_mono) cands[x].alive = false;
        }
    }
    for (auto& c : cands) {
      if (!c.alive) continue;
      const Element& hi = els_[c.i];
      // Product criterion, sound only in the single-component (ideal) case.
      if (prune_ && hi.single && ht.single && coprime(hi.lt.mono, ht.lt.mono)) {
        if (collect_) {
          // The pair reduces via the Koszul relation; record it.
          const Polynomial& fi = hi.vec[hi.lt.pos];
          const Polynomial& ftv = ht.vec[ht.lt.pos];
          std::vector<Polynomial> z(ninputs_, Polynomial(fm_.nvars));
          for (int k = 0; k < ninputs_; ++k)
            z[k] = ftv * hi.rep[k] - fi * ht.rep[k];
          record_syzygy(std::move(z));
        }
        continue;
      }
      pairs_.insert({c.lcm_mono.deg + fm_.shifts[ht.lt.pos], t, c.i, c.lcm_mono});
    }
  }

  void process_pair(const Pair& pr) {
    const Element& a = els_[pr.i];
    const Element& b = els_[pr.j];
    Monomial ma = pr.lcm_mono / a.lt.mono;
    Monomial mb = pr.lcm_mono / b.lt.mono;
    ModuleVector s = a.vec.mul_term(ma, 1 / a.lc) - b.vec.mul_term(mb, 1 / b.lc);
    std::vector<Polynomial> rep;
    if (track_) {
      rep.assign(ninputs_, Polynomial(fm_.nvars));
      for (int k = 0; k < ninputs_; ++k)
        rep[k] = a.rep[k].mul_term(ma, 1 / a.lc) - b.rep[k].mul_term(mb, 1 / b.lc);
    }
    reduce_and_insert(std::move(s), std::move(rep));
  }

  void reduce_and_insert(ModuleVector v, std::vector<Polynomial> rep) {
    while (true) {
      const Rat* lc = nullptr;
      auto lt = v.leading(&lc);
      if (!lt) {
        if (collect_) record_syzygy(std::move(rep));
        return;
      }
      int e = find_reducer(*lt);
      if (e < 0) break;
      Monomial m = lt->mono / els_[e].lt.mono;
      Rat c = *lc / els_[e].lc;
      v.sub_mul_term(els_[e].vec, m, c);
      if (track_)
        for (int k = 0; k < ninputs_; ++k)
          if (!els_[e].rep[k].is_zero()) rep[k].sub_mul_term(els_[e].rep[k], m, c);
    }
    // Tail-reduce for smaller elements before inserting.
    ModuleVector w = tail_reduce(std::move(v), track_ ? &rep : nullptr);
    append_element(std::move(w), std::move(rep));
  }

  // Reduces every non-leading term of v (the top is already irreducible).
  ModuleVector tail_reduce(ModuleVector v, std::vector<Polynomial>* rep) const {
    ModuleVector rem(fm_.nvars, fm_.rank());
    bool top = true;
    while (true) {
      const Rat* lc = nullptr;
      auto lt = v.leading(&lc);
      if (!lt) break;
      int e = top ? -1 : find_reducer(*lt);
      top = false;
      if (e >= 0) {
        Monomial m = lt->mono / els_[e].lt.mono;
        Rat c = *lc / els_[e].lc;
        v.sub_mul_term(els_[e].vec, m, c);
        if (rep)
          for (std::size_t k = 0; k < rep->size(); ++k)
            if (!els_[e].rep[k].is_zero()) (*rep)[k].sub_mul_term(els_[e].rep[k], m, c);
      } else {
        Polynomial t = Polynomial::term(fm_.nvars, lt->mono, *lc);
        rem[lt->pos] = rem[lt->pos] + t;
        v[lt->pos] = v[lt->pos] - t;
      }
    }
    return rem;
  }
};

void check_homogeneous(const FreeModule& fm, const std::vector<ModuleVector>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous(fm)) throw std::invalid_argument("generators must be homogeneous");
}

} // namespace

GroebnerBasis::GroebnerBasis(FreeModule fm, std::vector<ModuleVector> gens)
    : fm_(std::move(fm)), gens_(std::move(gens)) {
  Engine eng(fm_, /*track=*/true, /*collect=*/false, /*prune=*/true);
  for (const auto& g : gens_) eng.add_input(g);
  eng.complete();

  // Autoreduce: drop elements whose leading term is covered by another's,
  // then fully reduce tails against the survivors.
  const auto& els = eng.elements();
  std::vector<bool> keep(els.size(), true);
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (els[j].lt.pos == els[i].lt.pos && els[j].lt.mono.divides(els[i].lt.mono) &&
          (els[j].lt.mono != els[i].lt.mono || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  // Tail-reduce each survivor against the others; one full pass leaves every
  // term irreducible. Leading terms are already pairwise non-divisible.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < els.size(); ++i)
    if (keep[i]) idx.push_back(i);
  for (std::size_t i : idx) {
    ModuleVector w = els[i].vec;
    std::vector<Polynomial> rep = els[i].rep;
    ModuleVector rem(fm_.nvars, fm_.rank());
    while (true) {
      const Rat* lc = nullptr;
      auto lt = w.leading(&lc);
      if (!lt) break;
      int reducer = -1;
      for (std::size_t j : idx) {
        if (j == i) continue;
        if (els[j].lt.pos == lt->pos && els[j].lt.mono.divides(lt->mono)) {
          reducer = static_cast<int>(j);
          break;
        }
      }
      if (reducer >= 0) {
        Monomial m = lt->mono / els[reducer].lt.mono;
        Rat c = *lc / els[reducer].lc;
        w.sub_mul_term(els[reducer].vec, m, c);
        for (std::size_t k = 0; k < rep.size(); ++k)
          if (!els[reducer].rep[k].is_zero()) rep[k].sub_mul_term(els[reducer].rep[k], m, c);
      } else {
        Polynomial t = Polynomial::term(fm_.nvars, lt->mono, *lc);
        rem[lt->pos] = rem[lt->pos] + t;
        w[lt->pos] = w[lt->pos] - t;
      }
    }
    Rat f = rem.normalize_content();
    for (auto& p : rep) p = p.scaled(f);
    const Rat* lc2 = nullptr;
    auto lt2 = rem.leading(&lc2);
    lts_.push_back(*lt2);
    lcs_.push_back(*lc2);
    elems_.push_back(std::move(rem));
    reps_.push_back(std::move(rep));
  }
}

int GroebnerBasis::find_reducer(const ModTerm& t) const {
  for (std::size_t j = 0; j < lts_.size(); ++j)
    if (lts_[j].pos == t.pos && lts_[j].mono.divides(t.mono)) return static_cast<int>(j);
  return -1;
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& v) const {
  ModuleVector rem(fm_.nvars, fm_.rank());
  ModuleVector w = v;
  while (true) {
    const Rat* lc = nullptr;
    auto lt = w.leading(&lc);
    if (!lt) break;
    int r = find_reducer(*lt);
    if (r >= 0) {
      w.sub_mul_term(elems_[r], lt->mono / lts_[r].mono, *lc / lcs_[r]);
    } else {
      Polynomial t = Polynomial::term(fm_.nvars, lt->mono, *lc);
      rem[lt->pos] = rem[lt->pos] + t;
      w[lt->pos] = w[lt->pos] - t;
    }
  }
  return rem;
}

Membership GroebnerBasis::membership(const ModuleVector& v) const {
  Membership out;
  out.coeffs.assign(gens_.size(), Polynomial(fm_.nvars));
  ModuleVector w = v;
  while (true) {
    const Rat* lc = nullptr;
    auto lt = w.leading(&lc);
    if (!lt) break;
    int r = find_reducer(*lt);
    if (r < 0) return Membership{}; // irreducible leading term: not a member
    Monomial m = lt->mono / lts_[r].mono;
    Rat c = *lc / lcs_[r];
    w.sub_mul_term(elems_[r], m, c);
    for (std::size_t k = 0; k < out.coeffs.size(); ++k)
      if (!reps_[r][k].is_zero()) out.coeffs[k] = out.coeffs[k] + reps_[r][k].mul_term(m, c);
  }
  out.member = true;
  return out;
}

bool GroebnerBasis::spairs_reduce_to_zero() const {
  Engine eng(fm_, false, false, false);
  for (const auto& e : elems_) eng.add_input(e);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = i + 1; j < elems_.size(); ++j) {
      const Rat *ci = nullptr, *cj = nullptr;
      auto li = elems_[i].leading(&ci);
      auto lj = elems_[j].leading(&cj);
      if (!li || !lj || li->pos != lj->pos) continue;
      Monomial l = lcm(li->mono, lj->mono);
      ModuleVector s = elems_[i].mul_term(l / li->mono, 1 / *ci) -
                       elems_[j].mul_term(l / lj->mono, 1 / *cj);
      if (!eng.reduce(s, nullptr).is_zero()) return false;
    }
  return true;
}

SyzygyResult syzygies(const FreeModule& fm, const std::vector<ModuleVector>& gens,
                      bool prune_pairs) {
  check_homogeneous(fm, gens);
  SyzygyResult out;
  std::vector<int> shifts;
  shifts.reserve(gens.size());
  for (const auto& g : gens) {
    int d = g.degree(fm);
    shifts.push_back(d == kZeroDegree ? 0 : d);
  }
  out.module = FreeModule(fm.nvars, std::move(shifts));
  Engine eng(fm, true, true, prune_pairs);
  for (const auto& g : gens) eng.add_input(g);
  eng.complete();
  for (auto& z : eng.take_syzygies()) {
    ModuleVector v(std::move(z));
    v.normalize_content();
    out.generators.push_back(std::move(v));
  }
  return out;
}

Membership is_member(const FreeModule& fm, const ModuleVector& v,
                     const std::vector<ModuleVector>& gens) {
  GroebnerBasis gb(fm, gens);
  return gb.membership(v);
}

std::vector<ModuleVector> min_generators(const FreeModule& fm,
                                         const std::vector<ModuleVector>& gens) {
  check_homogeneous(fm, gens);
  std::vector<int> order(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = gens[a].degree(fm), db = gens[b].degree(fm);
    if (da != db) return da < db;
    return a < b;
  });
  Engine eng(fm, false, false, true);
  std::vector<ModuleVector> kept;
  for (int i : order) {
    if (gens[i].is_zero()) continue;
    if (!kept.empty() && eng.reduce(gens[i], nullptr).is_zero()) continue;
    ModuleVector v = gens[i];
    v.normalize_content();
    kept.push_back(v);
    eng.add_input(v);
    eng.complete();
  }
  return kept;
}

bool submodule_equal(const FreeModule& fm, const std::vector<ModuleVector>& a,
                     const std::vector<ModuleVector>& b) {
  GroebnerBasis ga(fm, a), gb(fm, b);
  for (const auto& v : a)
    if (!gb.contains(v)) return false;
  for (const auto& v : b)
    if (!ga.contains(v)) return false;
  return true;
}

std::vector<ModuleVector> kernel_of_map(const FreeModule& source, const FreeModule& target,
                                        const std::vector<ModuleVector>& rows) {
  if (static_cast<int>(rows.size()) != target.rank())
    throw std::invalid_argument("kernel_of_map: row count must match target rank");
  // Columns of the matrix, as elements of the target module.
  std::vector<ModuleVector> cols(source.rank(), ModuleVector(source.nvars, target.rank()));
  for (int h = 0; h < target.rank(); ++h) {
    if (rows[h].rank() != source.rank())
      throw std::invalid_argument("kernel_of_map: row width must match source rank");
    for (int j = 0; j < source.rank(); ++j) cols[j][h] = rows[h][j];
  }
  SyzygyResult syz = syzygies(target, cols);
  // Syzygy coordinates are exactly the source coordinates; the Schreyer
  // shifts must agree with the declared source shifts for homogeneity.
  for (int j = 0; j < source.rank(); ++j) {
    if (!cols[j].is_zero() && syz.module.shifts[j] != source.shifts[j])
      throw std::invalid_argument("kernel_of_map: matrix not homogeneous for given shifts");
  }
  return syz.generators;
}

} // namespace arr
