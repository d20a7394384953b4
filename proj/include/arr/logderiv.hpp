#ifndef ARR_LOGDERIV_HPP
#define ARR_LOGDERIV_HPP

#include "arr/arrangement.hpp"
#include "arr/groebner.hpp"

namespace arr {

// Derivations theta = sum f_i d/dx_i are module vectors in Der S = S^l with
// zero shifts; deg theta = common degree of the nonzero f_i.
inline FreeModule der_module(int nvars) { return FreeModule::unshifted(nvars, nvars); }

// theta(f) = sum comps[i] * df/dx_i.
Polynomial apply_derivation(const ModuleVector& theta, const Polynomial& f);

// theta(alpha_H) divisible by alpha_H^{m(H)} for every H.
bool derivation_in_module(const ModuleVector& theta, const Arrangement& am);

struct RelationMatrix {
  FreeModule source; // S^{l+n}: l derivation slots, then one slack per hyperplane
  FreeModule target; // S^n, unshifted
  std::vector<ModuleVector> rows;
};

// Row for H: (dalpha_H/dx_1, ..., dalpha_H/dx_l, 0, ..., -alpha_H^{m(H)}, ..., 0).
// D(A,m) is the projection of the kernel to the first l coordinates.
RelationMatrix relation_matrix(const Arrangement& am);

struct DerivationModule {
  Arrangement arr;
  FreeModule der;                // ambient Der S
  std::vector<ModuleVector> gens; // minimal homogeneous generators, normalized
  std::vector<int> ds;            // sorted degree multiset DS(A,m)

  int count() const { return static_cast<int>(gens.size()); }
};

DerivationModule derivation_module(const Arrangement& am);
std::vector<int> degree_sequence(const Arrangement& am);

ModuleVector euler_derivation(int nvars);
bool contains_euler(const DerivationModule& d);

// Saito's criterion: det of the generator coefficient matrix is a nonzero
// scalar multiple of prod alpha_H^{m(H)}; applies when |DS| = l.
bool saito_determinant_check(const DerivationModule& dm);

// {theta in D(A) : theta(alpha_i) = 0}, the complement of S theta_E.
std::vector<ModuleVector> euler_complement_module(const Arrangement& am, int i);

// Euler restriction rho: D(A) -> D(A^{H_i}), reduction modulo alpha_i in the
// chart that solves alpha_i = 0 for its pivot variable.
ModuleVector restrict_derivation(const ModuleVector& theta, const Arrangement& a, int i);

// Ziegler restriction pi: D_{H_i}(A) -> D(A^{H_i}, m^{H_i}); requires
// theta(alpha_i) = 0.
ModuleVector ziegler_restrict_derivation(const ModuleVector& theta, const Arrangement& a, int i);

// D(A) + ker rho_i^j == D(A_i), with ker rho_i^j = alpha_j * D(A_{i,j}).
bool kernel_sum_equals(const Arrangement& a, int i, int j);

// Text form `deg=<d>; [p1, p2, ..., pl]`.
std::string derivation_to_string(const ModuleVector& theta);

// Independent route for simple arrangements: the projection of the syzygies
// of (dQ/dx_1, ..., dQ/dx_l, Q) equals D(A) as a submodule of Der S.
bool jacobian_crosscheck(const Arrangement& a);

} // namespace arr

#endif
