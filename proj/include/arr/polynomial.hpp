#ifndef ARR_POLYNOMIAL_HPP
#define ARR_POLYNOMIAL_HPP

#include <climits>
#include <utility>
#include <vector>

#include "arr/monomial.hpp"
#include "arr/rational.hpp"

namespace arr {

struct Term {
  Monomial mono;
  Rat coef;
};

// Degree of the zero polynomial; ordered below every attainable degree.
inline constexpr int kZeroDegree = INT_MIN;

// Multivariate polynomial over Q in canonical form: terms strictly
// decreasing in degrevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, Rat c);
  static Polynomial variable(int nvars, int i);
  static Polynomial term(int nvars, Monomial m, Rat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // kZeroDegree for the zero polynomial.
  int degree() const { return terms_.empty() ? kZeroDegree : max_deg_; }
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rat& leading_coef() const { return terms_.front().coef; }

  Rat coefficient_of(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& b) const;
  Polynomial operator-(const Polynomial& b) const;
  Polynomial operator*(const Polynomial& b) const;
  Polynomial& operator+=(const Polynomial& b) { *this = *this + b; return *this; }
  Polynomial& operator-=(const Polynomial& b) { *this = *this - b; return *this; }

  Polynomial scaled(const Rat& c) const;
  Polynomial mul_term(const Monomial& m, const Rat& c) const;

  // f - c * x^m * g, the workhorse of reduction.
  void sub_mul_term(const Polynomial& g, const Monomial& m, const Rat& c);

  bool operator==(const Polynomial& b) const;
  bool operator!=(const Polynomial& b) const { return !(*this == b); }

  // Formal partial derivative with respect to variable i (0-based).
  Polynomial partial(int i) const;

  // Exact substitution x_var := replacement.
  Polynomial substitute(int var, const Polynomial& replacement) const;

  Polynomial pow(int k) const;

  // Drops variable `var` (its exponent must be 0 everywhere) and re-indexes
  // the remaining variables densely.
  Polynomial drop_variable(int var) const;

  // Content of the coefficient list as a positive rational; scaling by its
  // inverse yields coprime integer coefficients.
  Rat content() const;
  // Divides by the content and flips the sign so the leading coefficient is
  // positive. Returns the applied scalar factor.
  Rat normalize_content();

  std::string to_string() const;

  // Builds a canonical polynomial from arbitrary (monomial, coef) pairs.
  static Polynomial from_terms(int nvars, std::vector<Term> raw);

 private:
  int nvars_ = 0;
  int max_deg_ = 0;
  std::vector<Term> terms_;
  void recompute_degree();
  friend Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool negate_b);
};

struct PolyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text form: rational coefficients, '*' optional, variables x1..xl, '^' powers.
Polynomial parse_polynomial(const std::string& text, int nvars);

// Division by a single divisor: f = q*g + r with no term of r divisible by
// the leading monomial of g. Returns {q, r}.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);

// Whether g divides f exactly.
bool divides_exactly(const Polynomial& g, const Polynomial& f);

} // namespace arr

#endif
