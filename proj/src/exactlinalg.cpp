#include "arr/exactlinalg.hpp"

#include <algorithm>

namespace arr {

namespace {

// Forward elimination in place, fraction-free with per-row content stripping.
// Returns pivot (row, col) list; rows are permuted so pivot r sits in row r.
std::vector<std::pair<int, int>> echelon(IntMatrix& m, int cols) {
  std::vector<std::pair<int, int>> pivots;
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    for (int i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      // row_i <- p*row_i - a*row_r, then strip the content
      const Int p = m[r][c], a = m[i][c];
      Int g = 0;
      for (int j = c; j < cols; ++j) {
        m[i][j] = p * m[i][j] - a * m[r][j];
        if (sgn(m[i][j]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[i][j].get_mpz_t());
      }
      if (g > 1)
        for (int j = c; j < cols; ++j) m[i][j] /= g;
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

} // namespace

int rank_int(IntMatrix m) {
  if (m.empty()) return 0;
  int cols = static_cast<int>(m[0].size());
  return static_cast<int>(echelon(m, cols).size());
}

std::vector<std::vector<Int>> kernel_basis_int(const IntMatrix& m, int cols) {
  IntMatrix e = m;
  for (auto& row : e) row.resize(cols, Int(0));
  auto pivots = echelon(e, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;

  std::vector<std::vector<Int>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    // back-substitute pivot coordinates from the bottom up
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
      auto [r, c] = pivots[k];
      Rat s(0);
      for (int j = c + 1; j < cols; ++j)
        if (v[j] != 0 && sgn(e[r][j]) != 0) s += Rat(e[r][j]) * v[j];
      v[c] = -s / Rat(e[r][c]);
    }
    // clear denominators, make primitive with positive entry at the free slot
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& q : v)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> w(cols);
    for (int j = 0; j < cols; ++j) {
      Rat q = v[j] * Rat(den_lcm);
      w[j] = q.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), w[j].get_mpz_t());
    }
    if (num_gcd > 1)
      for (auto& z : w) z /= num_gcd;
    basis.push_back(std::move(w));
  }
  return basis;
}

int rank_mod_p(const IntMatrix& m, int cols, std::uint64_t p) {
  int rows = static_cast<int>(m.size());
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
  Int red;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < static_cast<int>(m[i].size()); ++j) {
      red = m[i][j] % static_cast<long>(p);
      long v = red.get_si();
      a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long>(p) : v);
    }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    std::uint64_t inv = powmod(a[r][c], p - 2);
    for (int j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (int j = c; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, a[r][j]);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
    ++r;
  }
  return r;
}

} // namespace arr
