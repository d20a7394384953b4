#include "arr/golden.hpp"

#include <algorithm>

#include "arr/classify.hpp"

namespace arr {

namespace {

// Seven planes, exponents (1,3,3). Same hyperplanes as
// Q = x1 x2 x3 (x1-x2)(x1-x3)(x2-x3)(x1+x2-x3), in the corpus order below.
const char* kFree7 = R"(# free, exponents (1,3,3)
vars: 3
form: x1
form: x2
form: x3
form: x1 + x2 - x3
form: x1 - x3
form: x2 - x1
form: x2 - x3
)";

// Eleven planes, exponents (1,5,5). Same hyperplanes as
// Q = x1 x2 x3 (x1+x2)(x1-x2)(x1+x3)(x1-x3)(x2+x3)(x1+x2+x3)(x1+2x2+x3)(x1-2x2+x3).
const char* kFree11 = R"(# free, exponents (1,5,5)
vars: 3
form: x3
form: x1
form: x2
form: x3 + x1
form: x1 + x2
form: x1 - x2
form: x3 + x2
form: x3 - x1
form: x3 + x1 + x2
form: x3 + x1 - 2*x2
form: x3 + x1 + 2*x2
)";

// Twelve hyperplanes in four variables, exponents (1,3,4,4); order follows
// the factors of Q.
const char* kFree12 = R"(# free, exponents (1,3,4,4)
vars: 4
form: x1
form: x2
form: x3
form: x4
form: x1 - x2
form: x1 - x3
form: x1 - x4
form: x2 - x3
form: x2 - x4
form: x3 - x4
form: x2 - x3 + x4
form: x1 - x2 + x3 - x4
)";

// Ten hyperplanes in four variables, exponents (1,3,3,3); the restriction to
// the second hyperplane is a rank-3 arrangement that is not free.
const char* kFree10d4 = R"(# free, exponents (1,3,3,3)
vars: 4
form: x1
form: x2
form: x3
form: x4
form: x1 - x2
form: x1 - x3
form: x2 - x3
form: x3 - x4
form: x2 - x3 + x4
form: x1 - x2 + x3 - x4
)";

// Ten planes, exponents (1,3,6); deleting the first two leaves a strictly
// plus-one generated arrangement with no free addition.
const char* kFree10d3 = R"(# free, exponents (1,3,6)
vars: 3
form: x1
form: x2
form: x3
form: x1 - x2
form: x1 + x2
form: x1 + 2*x2
form: 2*x1 + x2
form: 3*x1 + x2
form: x2 + x3
form: 3*x1 + x2 + x3
)";

// Lattice-equivalent pair with different derivation degree sequences; they
// differ only in the ninth plane.
const char* kPairB = R"(# DS = (1,5,6,6)
vars: 3
form: x1
form: x2
form: x3
form: x2 - 3*x3
form: x2 + 3*x3
form: x1 - x3
form: x1 + x3
form: x1 + x2
form: x1 + x2 - 3*x3
form: x1 + x2 + 3*x3
)";

const char* kPairC = R"(# DS = (1,6,6,6,6,6)
vars: 3
form: x1
form: x2
form: x3
form: x2 - 3*x3
form: x2 + 3*x3
form: x1 - x3
form: x1 + x3
form: x1 + x2
form: x1 + x2 - 4*x3
form: x1 + x2 + 3*x3
)";

std::vector<int> V(std::initializer_list<int> v) { return std::vector<int>(v); }

Arrangement del1(const Arrangement& a, std::initializer_list<int> idx_1based) {
  std::vector<int> zero;
  for (int i : idx_1based) zero.push_back(i - 1);
  return delete_hyperplanes(a, zero).arr;
}

bool shape_is(const FreeResolution& res, int pd, const std::vector<std::vector<int>>& shifts) {
  if (res.pd() != pd) return false;
  for (int j = 0; j <= pd; ++j) {
    std::vector<int> want = shifts[j];
    std::sort(want.begin(), want.end());
    if (res.shifts_at(j) != want) return false;
  }
  return true;
}

bool spog_is(const ClassificationReport& r, std::vector<int> po, int level) {
  std::sort(po.begin(), po.end());
  return r.verdict == Verdict::Spog && r.po_exponents == po && r.level == level;
}

bool free_is(const ClassificationReport& r, std::vector<int> exp) {
  std::sort(exp.begin(), exp.end());
  return r.verdict == Verdict::Free && r.exponents == exp;
}

} // namespace

const std::vector<GoldenArrangement>& golden_corpus() {
  static const std::vector<GoldenArrangement> corpus = {
      {"free7_133", kFree7},    {"free11_155", kFree11}, {"free12_1344", kFree12},
      {"free10_1333", kFree10d4}, {"free10_136", kFree10d3}, {"ds10_B", kPairB},
      {"ds10_C", kPairC},
  };
  return corpus;
}

Arrangement golden(const std::string& id) {
  for (const auto& g : golden_corpus())
    if (g.id == id) return parse_arrangement(g.text);
  throw std::invalid_argument("unknown golden arrangement '" + id + "'");
}

std::vector<GoldenExpectation> golden_expectations() {
  std::vector<GoldenExpectation> out;
  auto add = [&out](std::string id, std::string claim, std::string citation, int criterion,
                    std::function<bool()> run) {
    out.push_back({std::move(id), std::move(claim), std::move(citation), criterion,
                   std::move(run)});
  };

  // ----- free7_133 (criterion 1)
  add("free7_133/exp", "free with exponents (1,3,3)", "free7_133", 1, [] {
    return free_is(classify_arrangement(golden("free7_133")), {1, 3, 3});
  });
  add("free7_133/del2-del5", "deletions 2 and 5 are SPOG, PO=(1,3,3), level 3",
      "free7_133 single deletions", 1, [] {
        Arrangement a = golden("free7_133");
        return spog_is(classify_arrangement(del1(a, {2})), {1, 3, 3}, 3) &&
               spog_is(classify_arrangement(del1(a, {5})), {1, 3, 3}, 3);
      });
  add("free7_133/pair25", "deletion pair (2,5) is SPOG with PO=(1,2,3) and level 3",
      "free7_133 pair (2,5)", 1, [] {
        return spog_is(classify_arrangement(del1(golden("free7_133"), {2, 5})), {1, 2, 3}, 3);
      });

  // ----- free11_155 (criterion 2)
  add("free11_155/exp", "free with exponents (1,5,5)", "free11_155", 2, [] {
    return free_is(classify_arrangement(golden("free11_155")), {1, 5, 5});
  });
  add("free11_155/free-deletions", "deletions 1, 6, 10 are free with exponents (1,4,5)",
      "free11_155 single deletions", 2, [] {
        Arrangement a = golden("free11_155");
        for (int i : {1, 6, 10})
          if (!free_is(classify_arrangement(del1(a, {i})), {1, 4, 5})) return false;
        return true;
      });
  add("free11_155/level6-deletions", "deletions 3 and 4 are SPOG with level 6",
      "free11_155 single deletions", 2, [] {
        Arrangement a = golden("free11_155");
        return spog_is(classify_arrangement(del1(a, {3})), {1, 5, 5}, 6) &&
               spog_is(classify_arrangement(del1(a, {4})), {1, 5, 5}, 6);
      });
  add("free11_155/level5-deletions", "all other single deletions are SPOG with level 5",
      "free11_155 single deletions", 2, [] {
        Arrangement a = golden("free11_155");
        for (int i : {2, 5, 7, 8, 9, 11})
          if (!spog_is(classify_arrangement(del1(a, {i})), {1, 5, 5}, 5)) return false;
        return true;
      });
  add("free11_155/pair2-11", "DS(pair 2,11) = (1,5,5,5,5), resolution S[-6]^2 -> S[-5]^4+S[-1]",
      "free11_155 pair (2,11)", 2, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free11_155"), {2, 11}));
        return r.ds == V({1, 5, 5, 5, 5}) &&
               shape_is(r.res, 1, {{1, 5, 5, 5, 5}, {6, 6}});
      });
  add("free11_155/pair3-4", "DS(pair 3,4) = (1,5,5,5), resolution S[-7] -> S[-5]^3+S[-1]",
      "free11_155 pair (3,4)", 2, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free11_155"), {3, 4}));
        return r.ds == V({1, 5, 5, 5}) && r.verdict == Verdict::Other &&
               shape_is(r.res, 1, {{1, 5, 5, 5}, {7}});
      });
  add("free11_155/pair5-7", "pair (5,7) is SPOG with PO=(1,4,5) and level 5",
      "free11_155 pair (5,7)", 2, [] {
        return spog_is(classify_arrangement(del1(golden("free11_155"), {5, 7})), {1, 4, 5}, 5);
      });
  add("free11_155/pair3-5", "DS(pair 3,5) = (1,5,5,5,5), resolution S[-6]^2 -> S[-5]^4+S[-1]",
      "free11_155 pair (3,5)", 2, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free11_155"), {3, 5}));
        return r.ds == V({1, 5, 5, 5, 5}) &&
               shape_is(r.res, 1, {{1, 5, 5, 5, 5}, {6, 6}});
      });

  // ----- free12_1344 (criterion 3)
  add("free12_1344/exp", "free with exponents (1,3,4,4)", "free12_1344", 3, [] {
    return free_is(classify_arrangement(golden("free12_1344")), {1, 3, 4, 4});
  });
  add("free12_1344/levels", "deletions 1, 2 have level 4; deletions 8, 10 have level 5",
      "free12_1344 single deletions", 3, [] {
        Arrangement a = golden("free12_1344");
        return spog_is(classify_arrangement(del1(a, {1})), {1, 3, 4, 4}, 4) &&
               spog_is(classify_arrangement(del1(a, {2})), {1, 3, 4, 4}, 4) &&
               spog_is(classify_arrangement(del1(a, {8})), {1, 3, 4, 4}, 5) &&
               spog_is(classify_arrangement(del1(a, {10})), {1, 3, 4, 4}, 5);
      });
  add("free12_1344/pair1-2",
      "DS(pair 1,2) = (1,3,3,4,4), resolution S[-5] -> S[-4]^2+S[-3]^2+S[-1]",
      "free12_1344 pair (1,2)", 3, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free12_1344"), {1, 2}));
        return r.ds == V({1, 3, 3, 4, 4}) &&
               shape_is(r.res, 1, {{1, 3, 3, 4, 4}, {5}});
      });
  add("free12_1344/pair2-10",
      "DS(pair 2,10) = (1,3,4,4,4,4), resolution S[-5]^2 -> S[-4]^4+S[-3]+S[-1]",
      "free12_1344 pair (2,10)", 3, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free12_1344"), {2, 10}));
        return r.ds == V({1, 3, 4, 4, 4, 4}) &&
               shape_is(r.res, 1, {{1, 3, 4, 4, 4, 4}, {5, 5}});
      });
  add("free12_1344/pair1-8",
      "DS(pair 1,8) = (1,3,4,4,4,5), resolution S[-6]+S[-5] -> S[-5]+S[-4]^3+S[-3]+S[-1]",
      "free12_1344 pair (1,8)", 3, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free12_1344"), {1, 8}));
        return r.ds == V({1, 3, 4, 4, 4, 5}) &&
               shape_is(r.res, 1, {{1, 3, 4, 4, 4, 5}, {5, 6}});
      });

  // ----- free10_1333 (criterion 4)
  add("free10_1333/exp", "free with exponents (1,3,3,3)", "free10_1333", 4, [] {
    return free_is(classify_arrangement(golden("free10_1333")), {1, 3, 3, 3});
  });
  add("free10_1333/levels", "deletions 1, 2, 3 are SPOG with level 3",
      "free10_1333 single deletions", 4, [] {
        Arrangement a = golden("free10_1333");
        for (int i : {1, 2, 3})
          if (!spog_is(classify_arrangement(del1(a, {i})), {1, 3, 3, 3}, 3)) return false;
        return true;
      });
  add("free10_1333/pairs-with-2", "every pair (2,j) has |DS| = 5",
      "free10_1333 pairs through hyperplane 2", 4, [] {
        Arrangement a = golden("free10_1333");
        for (int j = 1; j <= a.size(); ++j) {
          if (j == 2) continue;
          if (degree_sequence(del1(a, {2, j})).size() != 5) return false;
        }
        return true;
      });
  add("free10_1333/pair1-3",
      "|DS(pair 1,3)| = 7, resolution S[-5] -> S[-4]^4 -> S[-3]^6+S[-1], pd = 2",
      "free10_1333 pair (1,3)", 4, [] {
        ClassificationReport r = classify_arrangement(del1(golden("free10_1333"), {1, 3}));
        return r.ds.size() == 7 && r.pd == 2 &&
               shape_is(r.res, 2, {{1, 3, 3, 3, 3, 3, 3}, {4, 4, 4, 4}, {5}});
      });

  // ----- free10_136 (criterion 5)
  add("free10_136/exp", "free with exponents (1,3,6)", "free10_136", 5, [] {
    return free_is(classify_arrangement(golden("free10_136")), {1, 3, 6});
  });
  add("free10_136/pair1-2", "pair (1,2) is SPOG with PO=(1,3,5) and level 6",
      "free10_136 pair (1,2)", 5, [] {
        return spog_is(classify_arrangement(del1(golden("free10_136"), {1, 2})), {1, 3, 5}, 6);
      });
  add("free10_136/no-free-addition",
      "level coefficient is x2+x3; adding its kernel does not give a free arrangement",
      "free10_136 pair (1,2)", 5, [] {
        Arrangement a12 = del1(golden("free10_136"), {1, 2});
        ClassificationReport r = classify_arrangement(a12);
        if (r.verdict != Verdict::Spog) return false;
        LinearForm expect = LinearForm::from_polynomial(parse_polynomial("x2 + x3", 3));
        if (!(r.level_coefficient && *r.level_coefficient == expect)) return false;
        FreeAdditionReport fa = free_addition_candidate(a12, r);
        return fa.candidate == expect && !fa.addition_free;
      });

  // ----- ds10_B / ds10_C (criterion 6)
  add("ds10_B/ds", "DS(B) = (1,5,6,6)", "ds10_B", 6,
      [] { return degree_sequence(golden("ds10_B")) == V({1, 5, 6, 6}); });
  add("ds10_C/ds", "DS(C) = (1,6,6,6,6,6)", "ds10_C", 6,
      [] { return degree_sequence(golden("ds10_C")) == V({1, 6, 6, 6, 6, 6}); });
  add("ds10_BC/lattice", "L(B) and L(C) are isomorphic by an explicit bijection",
      "ds10_B vs ds10_C", 6, [] {
        // Fails: hyperplane 1 of B lies on three triple points and no
        // hyperplane of C does, so no incidence-preserving bijection exists.
        return lattice_isomorphic(golden("ds10_B"), golden("ds10_C")).isomorphic;
      });
  add("ds10_BC/weak-combinatorics",
      "rank-2 flat size multisets of B and C agree while the DS differ",
      "ds10_B vs ds10_C", 6, [] {
        CombinatoricsDemo demo = combinatorics_vs_geometry(golden("ds10_B"), golden("ds10_C"));
        return demo.flat_sizes_equal && !demo.ds_equal;
      });

  return out;
}

} // namespace arr
