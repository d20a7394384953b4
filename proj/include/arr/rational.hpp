#ifndef ARR_RATIONAL_HPP
#define ARR_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace arr {

// Exact arithmetic over Q. mpq_class keeps values canonical:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline const Int& numerator(const Rat& q) { return q.get_num(); }
inline const Int& denominator(const Rat& q) { return q.get_den(); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

} // namespace arr

#endif
