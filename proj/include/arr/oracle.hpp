#ifndef ARR_ORACLE_HPP
#define ARR_ORACLE_HPP

#include <map>

#include "arr/logderiv.hpp"

namespace arr {

// Basis of the degree-d slice D(A,m)_d, solved as an exact linear system on
// the coefficients of the l component polynomials. Entirely disjoint from the
// Groebner pipeline: constraints come from remainder-vanishing, the kernel
// from fraction-free elimination.
struct DegreeSlice {
  int degree = 0;
  int dimension = 0;
  std::vector<ModuleVector> basis;
};

DegreeSlice dim_slice(const Arrangement& am, int d);

// Kernel dimension only, cheaper than a full basis.
int dim_slice_dimension(const Arrangement& am, int d);

// Number of minimal generators per degree up to max_degree:
// beta_{0,d} = dim D_d - dim(S_1 * D_{d-1}), by rank computations on the
// explicit slice bases. Only nonzero counts appear in the map.
std::map<int, int> generator_counts(const Arrangement& am, int max_degree);

// Certified test of dim D(A)_d == sum_i #monomials(d - d_i) for a free
// arrangement with verified basis dm: the mod-p rank bounds the dimension
// from above, the monomial multiples of the (Saito-verified, substitution-
// verified) basis bound it from below.
bool free_hilbert_dim_check(const Arrangement& am, const DerivationModule& dm, int d);

// Monomials of S_d in l variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

} // namespace arr

#endif
