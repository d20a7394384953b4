#ifndef ARR_GROEBNER_HPP
#define ARR_GROEBNER_HPP

#include <memory>
#include <vector>

#include "arr/module.hpp"

namespace arr {

struct Membership {
  bool member = false;
  // v = sum coeffs[i] * gens[i] over the generators passed in, when member.
  std::vector<Polynomial> coeffs;
};

// Reduced Groebner basis of a submodule of a graded free module, under
// degrevlex term-over-position order (ties toward lower position). Keeps
// division certificates over the original generator list.
class GroebnerBasis {
 public:
  GroebnerBasis(FreeModule fm, std::vector<ModuleVector> gens);

  const FreeModule& module() const { return fm_; }
  const std::vector<ModuleVector>& generators() const { return gens_; }
  const std::vector<ModuleVector>& elements() const { return elems_; }

  // Fully reduced remainder: no term divisible by any basis leading term.
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }
  Membership membership(const ModuleVector& v) const;

  // Every S-pair of basis elements reduces to zero (exactness re-check).
  bool spairs_reduce_to_zero() const;

 private:
  int find_reducer(const ModTerm& t) const;

  FreeModule fm_;
  std::vector<ModuleVector> gens_;
  std::vector<ModuleVector> elems_;
  std::vector<std::vector<Polynomial>> reps_; // elems_[i] = sum reps_[i][j] * gens_[j]
  std::vector<ModTerm> lts_;
  std::vector<Rat> lcs_;
};

// Generators of the first syzygy module of `gens`. The ambient free module of
// the result carries the Schreyer-induced shifts (degrees of the inputs).
struct SyzygyResult {
  FreeModule module;
  std::vector<ModuleVector> generators;
};
SyzygyResult syzygies(const FreeModule& fm, const std::vector<ModuleVector>& gens,
                      bool prune_pairs = true);

Membership is_member(const FreeModule& fm, const ModuleVector& v,
                     const std::vector<ModuleVector>& gens);

// Minimal homogeneous generating subset, chosen by ascending (degree, index);
// graded Nakayama makes the degree multiset independent of the choice.
std::vector<ModuleVector> min_generators(const FreeModule& fm,
                                         const std::vector<ModuleVector>& gens);

bool submodule_equal(const FreeModule& fm, const std::vector<ModuleVector>& a,
                     const std::vector<ModuleVector>& b);

// Kernel of the graded map source -> target given by the matrix whose rows
// are `rows` (one per target slot): x maps to (row_h . x)_h. Kernel elements
// live in `source`; computed as syzygies of the matrix columns.
std::vector<ModuleVector> kernel_of_map(const FreeModule& source, const FreeModule& target,
                                        const std::vector<ModuleVector>& rows);

} // namespace arr

#endif
