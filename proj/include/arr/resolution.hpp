#ifndef ARR_RESOLUTION_HPP
#define ARR_RESOLUTION_HPP

#include <map>
#include <optional>

#include "arr/logderiv.hpp"

namespace arr {

// One syzygy step M_k -> M_{k-1}: shifts of M_k and the differential rows,
// each row a relation on the previous step's generators.
struct ResolutionStep {
  std::vector<int> shifts;
  std::vector<ModuleVector> differential;
};

// Minimal graded free resolution 0 -> M_k -> ... -> M_0 -> D(A,m) -> 0.
// steps[0] describes M_1; M_0 is the minimal generator data itself.
struct FreeResolution {
  DerivationModule m0;
  std::vector<ResolutionStep> steps;

  int pd() const { return static_cast<int>(steps.size()); }
  const std::vector<int>& m0_shifts() const { return m0.ds; }
  // Shift multiset of step j (1-based homological index), sorted.
  std::vector<int> shifts_at(int j) const;
};

FreeResolution minimal_free_resolution(const Arrangement& am);
FreeResolution minimal_free_resolution(const DerivationModule& dm);

// betti[j][d] = number of degree-d generators of M_j.
using BettiTable = std::map<int, std::map<int, int>>;
BettiTable betti_table(const FreeResolution& res);
int projective_dimension(const FreeResolution& res);

// |m| == sum_j (-1)^j sum(shifts of M_j).
bool euler_characteristic_check(const FreeResolution& res, const Arrangement& am);

// Structure checks for large NT-free-2 resolutions (more than l+2 minimal
// generators): row patterns of R_1 and the shape of M_2.
struct Thm38Report {
  std::vector<int> levels;            // c_1 <= ... <= c_r from DS minus exp(A)
  int r = 0;                          // |DS| - l
  int t = 0;                          // extra M_1 generators
  bool ds_contains_exponents = false; // DS(A_12) contains exp(A) as multiset
  bool m1_contains_levels_plus_one = false;
  bool m1_strictly_larger = false;
  bool memb_alpha1_phi1 = false; // alpha_1 phi_1 in <theta basis>
  bool memb_alpha2_phi2 = false; // alpha_2 phi_2 in <theta basis>
  bool memb_alpha2_phik = false; // alpha_2 phi_k in <theta basis> + S phi_1, k >= 3
  bool m2_matches_extra_shifts = false; // M_2 == {e_i + 1}
  bool t_equals_r_minus_2 = false;      // asserted only when M_2 matches
  bool m3_zero = false;                 // asserted only when M_2 matches
  bool consistent() const {
    bool core = ds_contains_exponents && m1_contains_levels_plus_one && m1_strictly_larger &&
                memb_alpha1_phi1 && memb_alpha2_phi2 && memb_alpha2_phik;
    if (m2_matches_extra_shifts) return core && t_equals_r_minus_2 && m3_zero;
    return core;
  }
};

// Preconditions: A free, neither deletion free, |DS(A_{i,j})| > l + 2.
// Throws std::invalid_argument when they fail.
Thm38Report thm38_structure_check(const Arrangement& a, int i, int j,
                                  const FreeResolution& res_a12);

} // namespace arr

#endif
