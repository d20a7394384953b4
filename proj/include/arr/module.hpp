#ifndef ARR_MODULE_HPP
#define ARR_MODULE_HPP

#include <optional>
#include <vector>

#include "arr/polynomial.hpp"

namespace arr {

// Graded free module S^rank with a degree shift per standard generator:
// slot i represents S[-shifts[i]], so a homogeneous element has
// poly-degree + shift constant across its nonzero components.
struct FreeModule {
  int nvars = 0;
  std::vector<int> shifts;

  FreeModule() = default;
  FreeModule(int nv, std::vector<int> sh) : nvars(nv), shifts(std::move(sh)) {}
  static FreeModule unshifted(int nvars, int rank) {
    return FreeModule(nvars, std::vector<int>(rank, 0));
  }
  int rank() const { return static_cast<int>(shifts.size()); }
};

// Position + monomial of a module term. Order: term-over-position with
// degrevlex on monomials; equal monomials break toward the lower position.
struct ModTerm {
  int pos = -1;
  Monomial mono;
};

inline int modterm_cmp(const ModTerm& a, const ModTerm& b) {
  int c = degrevlex_cmp(a.mono, b.mono);
  if (c != 0) return c;
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return 0;
}

// Element of a free module, stored component-wise.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(int nvars, int rank)
      : comps_(static_cast<std::size_t>(rank), Polynomial(nvars)) {}
  explicit ModuleVector(std::vector<Polynomial> comps) : comps_(std::move(comps)) {}

  static ModuleVector unit(int nvars, int rank, int pos) {
    ModuleVector v(nvars, rank);
    v.comps_[pos] = Polynomial::constant(nvars, 1);
    return v;
  }

  int rank() const { return static_cast<int>(comps_.size()); }
  int nvars() const { return comps_.empty() ? 0 : comps_[0].nvars(); }
  const Polynomial& operator[](int i) const { return comps_[i]; }
  Polynomial& operator[](int i) { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  bool is_zero() const;

  // Degree as a homogeneous element of fm; kZeroDegree for 0.
  int degree(const FreeModule& fm) const;
  bool is_homogeneous(const FreeModule& fm) const;

  // Leading module term under the TOP order; nullopt when zero.
  std::optional<ModTerm> leading(const Rat** coef_out = nullptr) const;

  ModuleVector operator+(const ModuleVector& b) const;
  ModuleVector operator-(const ModuleVector& b) const;
  ModuleVector operator-() const;
  ModuleVector scaled(const Rat& c) const;
  ModuleVector mul_term(const Monomial& m, const Rat& c) const;
  ModuleVector mul_poly(const Polynomial& p) const;

  // v -= c * x^m * g
  void sub_mul_term(const ModuleVector& g, const Monomial& m, const Rat& c);

  bool operator==(const ModuleVector& b) const { return comps_ == b.comps_; }
  bool operator!=(const ModuleVector& b) const { return !(*this == b); }

  // Scale to coprime integer coefficients with positive leading coefficient.
  // Returns the applied factor.
  Rat normalize_content();

  std::string to_string() const;

 private:
  std::vector<Polynomial> comps_;
};

} // namespace arr

#endif
