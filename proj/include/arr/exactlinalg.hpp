#ifndef ARR_EXACTLINALG_HPP
#define ARR_EXACTLINALG_HPP

#include <cstdint>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

using IntMatrix = std::vector<std::vector<Int>>;

// Rank by fraction-free (Bareiss) elimination.
int rank_int(IntMatrix m);

// Exact kernel basis of m * x = 0, one primitive integer vector per free
// column, deterministic order. m has dimensions rows x cols.
std::vector<std::vector<Int>> kernel_basis_int(const IntMatrix& m, int cols);

// Rank over Z/p for a machine prime p; a lower bound on the rational rank,
// hence n - rank_mod_p upper-bounds the rational nullity.
int rank_mod_p(const IntMatrix& m, int cols, std::uint64_t p);

inline constexpr std::uint64_t kCertPrime = 2147483629ULL;

} // namespace arr

#endif
