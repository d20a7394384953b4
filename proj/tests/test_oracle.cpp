#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/golden.hpp"
#include "arr/oracle.hpp"

using namespace arr;

namespace {

Arrangement booleanN(int n) {
  std::string t = "vars: " + std::to_string(n) + "\n";
  for (int i = 1; i <= n; ++i) t += "form: x" + std::to_string(i) + "\n";
  return parse_arrangement(t);
}

} // namespace

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_degree(3, 0).size() == 1);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(4, 3).size() == 20);
  auto ms = monomials_of_degree(2, 3);
  for (std::size_t i = 1; i < ms.size(); ++i)
    CHECK(degrevlex_cmp(ms[i - 1], ms[i]) > 0);
}

TEST_CASE("dim_slice on coordinate arrangements") {
  Arrangement b2 = booleanN(2);
  CHECK(dim_slice(b2, 1).dimension == 2);
  CHECK(dim_slice(b2, 2).dimension == 4); // free with exponents (1,1)
  CHECK(dim_slice(b2, 0).dimension == 0);
  // basis elements satisfy the divisibility conditions exactly
  for (int d : {1, 2, 3}) {
    DegreeSlice s = dim_slice(b2, d);
    CHECK(static_cast<int>(s.basis.size()) == s.dimension);
    for (const auto& th : s.basis) CHECK(derivation_in_module(th, b2));
  }
}

TEST_CASE("dim_slice on the seven-plane free arrangement") {
  // free with exponents (1,3,3): dim D_3 = dim S_2 + 2 = 8
  Arrangement g = golden("free7_133");
  DegreeSlice s = dim_slice(g, 3);
  CHECK(s.dimension == 8);
  for (const auto& th : s.basis) CHECK(derivation_in_module(th, g));
  CHECK(dim_slice_dimension(g, 3) == 8);
}

TEST_CASE("dim_slice respects multiplicities") {
  Arrangement z = ziegler_restriction(golden("free7_133"), 2);
  // free multiarrangement with exponents (3,3)
  CHECK(dim_slice(z, 2).dimension == 0);
  CHECK(dim_slice(z, 3).dimension == 2);
  for (const auto& th : dim_slice(z, 4).basis) CHECK(derivation_in_module(th, z));
}

TEST_CASE("generator_counts") {
  CHECK(generator_counts(booleanN(3), 3) == std::map<int, int>{{1, 3}});
  CHECK(generator_counts(golden("ds10_B"), 7) ==
        std::map<int, int>{{1, 1}, {5, 1}, {6, 2}});
  CHECK(generator_counts(golden("ds10_C"), 7) == std::map<int, int>{{1, 1}, {6, 5}});
}

TEST_CASE("oracle agrees with the engine on corpus degree sequences") {
  for (const char* id : {"free7_133", "free11_155", "ds10_B", "ds10_C"}) {
    Arrangement a = golden(id);
    std::vector<int> ds = degree_sequence(a);
    std::map<int, int> hist;
    for (int d : ds) hist[d] += 1;
    CHECK(generator_counts(a, ds.back() + 1) == hist);
  }
}

TEST_CASE("free hilbert identity, certified") {
  Arrangement g = golden("free7_133");
  DerivationModule dm = derivation_module(g);
  for (int d = 0; d <= g.size() + 2; ++d) CHECK(free_hilbert_dim_check(g, dm, d));
  Arrangement g11 = golden("free11_155");
  DerivationModule dm11 = derivation_module(g11);
  for (int d = 0; d <= g11.size() + 2; ++d) CHECK(free_hilbert_dim_check(g11, dm11, d));
  // non-free input is rejected
  Arrangement b = golden("ds10_B");
  CHECK_FALSE(free_hilbert_dim_check(b, derivation_module(b), 3));
}

TEST_CASE("oracle dimension equals exact slice dimension (spot check, mod-p route)") {
  Arrangement g = golden("free11_155");
  DerivationModule dm = derivation_module(g);
  for (int d : {4, 5, 6, 7}) {
    int exact = dim_slice_dimension(g, d);
    // free Hilbert prediction must match the exact kernel dimension
    long expected = 0;
    for (int di : dm.ds) {
      int k = d - di;
      if (k < 0) continue;
      long binom = 1;
      for (int t = 1; t <= g.nvars - 1; ++t) binom = binom * (k + t) / t;
      expected += binom;
    }
    CHECK(exact == expected);
    CHECK(free_hilbert_dim_check(g, dm, d));
  }
}
