#ifndef ARR_MONOMIAL_HPP
#define ARR_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace arr {

// At most kMaxVars ambient variables; the paper-scale examples use at most 4.
inline constexpr int kMaxVars = 8;

// Exponent vector with cached total degree. Variables are 0-based internally
// (x1 <-> index 0); all user-facing text uses x1..xl.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint8_t nvars = 0;
  std::uint16_t deg = 0;

  static Monomial one(int n) {
    Monomial m;
    m.nvars = static_cast<std::uint8_t>(n);
    return m;
  }
  static Monomial var(int n, int i, int power = 1) {
    Monomial m = one(n);
    if (i < 0 || i >= n) throw std::out_of_range("variable index");
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& b) const {
    for (int i = 0; i < nvars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& b) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + b.e[i]);
    r.deg = static_cast<std::uint16_t>(deg + b.deg);
    return r;
  }

  // Exact quotient; caller guarantees b.divides(*this).
  Monomial operator/(const Monomial& b) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] - b.e[i]);
    r.deg = static_cast<std::uint16_t>(deg - b.deg);
    return r;
  }

  bool operator==(const Monomial& b) const {
    if (nvars != b.nvars || deg != b.deg) return false;
    for (int i = 0; i < nvars; ++i)
      if (e[i] != b.e[i]) return false;
    return true;
  }
  bool operator!=(const Monomial& b) const { return !(*this == b); }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (int i = 0; i < a.nvars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
  }
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

// Graded reverse lexicographic order with x1 > x2 > ... > xl.
// Returns negative / 0 / positive as a < b / a == b / a > b.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = a.nvars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

} // namespace arr

#endif
