#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/arrangement.hpp"
#include "arr/golden.hpp"

using namespace arr;

TEST_CASE("linear form normalization") {
  LinearForm f = LinearForm::from_rationals({Rat(-2), Rat(4), Rat(-6)});
  CHECK(f.c == std::vector<Int>{1, -2, 3});
  LinearForm g = LinearForm::from_rationals({Rat(0), Rat(1, 2), Rat(3, 4)});
  CHECK(g.c == std::vector<Int>{0, 2, 3});
  CHECK_THROWS(LinearForm::from_rationals({Rat(0), Rat(0)}));
  CHECK_THROWS(LinearForm::from_polynomial(parse_polynomial("x1^2", 2)));
  CHECK_THROWS(LinearForm::from_polynomial(parse_polynomial("x1 + 1", 2)));
}

TEST_CASE("parse_arrangement") {
  Arrangement a = parse_arrangement("vars: 3\nform: x1\nform: x2\nform: x3\n");
  CHECK(a.size() == 3);
  CHECK(a.nvars == 3);
  CHECK(a.is_simple());

  Arrangement g = golden("free7_133");
  CHECK(g.size() == 7);
  CHECK(g.nvars == 3);

  // scalar multiples define the same hyperplane
  CHECK_THROWS_AS(parse_arrangement("vars: 2\nform: x1\nform: 2*x1\n"), ArrParseError);
  CHECK_THROWS_AS(parse_arrangement("vars: 2\nform: x1 - x1\n"), ArrParseError);
  CHECK_THROWS_AS(parse_arrangement("vars: 2\nbogus: 1\n"), ArrParseError);
  CHECK_THROWS_AS(parse_arrangement("form: x1\n"), ArrParseError);
  // line numbers are reported
  try {
    parse_arrangement("vars: 2\nform: x1\nform: x1 +\n");
    CHECK(false);
  } catch (const ArrParseError& e) {
    CHECK(e.line == 3);
  }

  // multiplicities
  Arrangement m = parse_arrangement("vars: 2\nform: x1\nmult: 2\nform: x2\n");
  CHECK(m.mult == std::vector<int>{2, 1});
  CHECK(m.weight() == 3);
  CHECK_FALSE(m.is_simple());
}

TEST_CASE("serialization round trip") {
  for (const auto& g : golden_corpus()) {
    Arrangement a = parse_arrangement(g.text);
    std::string text = serialize_arrangement(a);
    Arrangement b = parse_arrangement(text);
    CHECK(a.forms == b.forms);
    CHECK(a.mult == b.mult);
    CHECK(serialize_arrangement(b) == text);
  }
}

#ifdef ARR_DATA_DIR
TEST_CASE("shipped .arr files match the embedded corpus") {
  for (const auto& g : golden_corpus()) {
    Arrangement shipped =
        parse_arrangement_file(std::string(ARR_DATA_DIR) + "/" + g.id + ".arr");
    Arrangement embedded = parse_arrangement(g.text);
    CHECK(shipped.forms == embedded.forms);
    CHECK(shipped.mult == embedded.mult);
  }
}
#endif

TEST_CASE("defining_polynomial") {
  Arrangement b3 = parse_arrangement("vars: 3\nform: x1\nform: x2\nform: x3\n");
  CHECK(defining_polynomial(b3) == parse_polynomial("x1*x2*x3", 3));
  Arrangement g = golden("free7_133");
  Polynomial q = defining_polynomial(g);
  CHECK(q.degree() == 7);
  CHECK(q.is_homogeneous());
  Arrangement empty;
  empty.nvars = 3;
  CHECK(defining_polynomial(empty) == Polynomial::constant(3, 1));
}

TEST_CASE("intersection lattice") {
  Arrangement b3 = parse_arrangement("vars: 3\nform: x1\nform: x2\nform: x3\n");
  auto flats = intersection_lattice(b3, 2);
  int r1 = 0, r2 = 0;
  for (const auto& f : flats) {
    if (f.rank == 1) ++r1;
    if (f.rank == 2) ++r2;
  }
  CHECK(r1 == 3);
  CHECK(r2 == 3);

  // the (1,2) flat of the seven-plane arrangement also contains plane 6
  Arrangement g = golden("free7_133");
  Flat f = flat_closure(g, {0, 1});
  CHECK(f.hyps == std::vector<int>{0, 1, 5});
  CHECK(flat_multiplicity(g, 0, 1) == 3);

  Arrangement empty;
  empty.nvars = 3;
  auto ef = intersection_lattice(empty, 2);
  CHECK(ef.size() == 1);
  CHECK(ef[0].rank == 0);
}

TEST_CASE("flat_multiplicity on the eleven-plane corpus case") {
  Arrangement g = golden("free11_155");
  CHECK(flat_multiplicity(g, 1, 10) == 2); // pair (2,11)
  CHECK(flat_multiplicity(g, 2, 3) > 2);   // pair (3,4)
  CHECK_THROWS(flat_multiplicity(g, 0, 0));
}

TEST_CASE("delete_hyperplanes") {
  Arrangement b3 = parse_arrangement("vars: 3\nform: x1\nform: x2\nform: x3\n");
  Deletion d = delete_hyperplanes(b3, {2});
  CHECK(d.arr.size() == 2);
  CHECK(d.arr.forms[0].to_string() == "x1");
  CHECK(d.old_to_new == std::vector<int>{0, 1, -1});

  Arrangement g = golden("free7_133");
  Deletion d25 = delete_hyperplanes(g, {1, 4});
  CHECK(d25.arr.size() == 5);
  CHECK(d25.new_to_old == std::vector<int>{0, 2, 3, 5, 6});

  Deletion none = delete_hyperplanes(g, {});
  CHECK(none.arr.forms == g.forms);
  CHECK_THROWS(delete_hyperplanes(g, {9}));
}

TEST_CASE("euler_restriction") {
  Arrangement b3 = parse_arrangement("vars: 3\nform: x1\nform: x2\nform: x3\n");
  Restriction r = euler_restriction(b3, 2);
  CHECK(r.arr.size() == 2);
  CHECK(r.arr.nvars == 2);
  CHECK(r.arr.forms[0].to_string() == "x1");
  CHECK(r.arr.forms[1].to_string() == "x2");

  // restriction of the seven-plane arrangement to x3 = 0
  Arrangement g = golden("free7_133");
  Restriction r3 = euler_restriction(g, 2);
  CHECK(r3.arr.size() == 4);
  std::vector<std::string> got;
  for (const auto& f : r3.arr.forms) got.push_back(f.to_string());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"x1", "x1 + x2", "x1 - x2", "x2"});
}

TEST_CASE("ziegler_restriction") {
  Arrangement b3 = parse_arrangement("vars: 3\nform: x1\nform: x2\nform: x3\n");
  Arrangement z = ziegler_restriction(b3, 2);
  CHECK(z.size() == 2);
  CHECK(z.mult == std::vector<int>{1, 1});
  CHECK(z.weight() == 2);

  Arrangement g = golden("free7_133");
  Arrangement z3 = ziegler_restriction(g, 2);
  CHECK(z3.size() == 4);
  CHECK(z3.weight() == 6);
}

TEST_CASE("sum of Ziegler multiplicities is |A| - 1, all corpus, all hyperplanes") {
  for (const auto& gc : golden_corpus()) {
    Arrangement a = parse_arrangement(gc.text);
    for (int i = 0; i < a.size(); ++i)
      CHECK(ziegler_restriction(a, i).weight() == a.size() - 1);
  }
}

TEST_CASE("restriction size shrinks under deletion; collision rule") {
  for (const auto& gc : golden_corpus()) {
    Arrangement a = parse_arrangement(gc.text);
    for (int h = 0; h < a.size(); ++h) {
      Restriction base = euler_restriction(a, h);
      for (int k = 0; k < a.size(); ++k) {
        if (k == h) continue;
        Deletion d = delete_hyperplanes(a, {k});
        Restriction sub = euler_restriction(d.arr, d.old_to_new[h]);
        CHECK(sub.arr.size() <= base.arr.size());
        // equality iff some other plane hits the same line of H as k does
        bool collision = false;
        for (int t = 0; t < a.size(); ++t)
          if (t != h && t != k && base.image[t] == base.image[k]) collision = true;
        CHECK((sub.arr.size() == base.arr.size()) == collision);
      }
    }
  }
}

TEST_CASE("localization") {
  Arrangement g = golden("free7_133");
  Flat f = flat_closure(g, {0, 1});
  Arrangement loc = localization(g, f);
  CHECK(loc.size() == 3);
  CHECK(loc.forms[2] == g.forms[5]);
  CHECK(flat_multiplicity(g, 0, 1) == loc.size());
  // rank-0 flat gives back the whole arrangement
  Flat ambient;
  ambient.rank = 0;
  for (int i = 0; i < g.size(); ++i) ambient.hyps.push_back(i);
  CHECK(localization(g, ambient).size() == g.size());
}

TEST_CASE("flat multiplicity equals localization size on every corpus pair") {
  for (const auto& gc : golden_corpus()) {
    Arrangement a = parse_arrangement(gc.text);
    for (int i = 0; i < a.size(); ++i)
      for (int j = i + 1; j < a.size(); ++j) {
        int fm = flat_multiplicity(a, i, j);
        CHECK(fm >= 2);
        CHECK(fm == localization(a, flat_closure(a, {i, j})).size());
      }
  }
}

TEST_CASE("eliminate_modulo") {
  LinearForm alpha = LinearForm::from_polynomial(parse_polynomial("x1 - x2", 3));
  // x1 := x2 modulo alpha, then x2, x3 are renamed to the two chart variables
  Polynomial p = parse_polynomial("x1 + x3", 3);
  CHECK(eliminate_modulo(p, alpha) == parse_polynomial("x1 + x2", 2));
  Polynomial q = parse_polynomial("x1 - x2", 3);
  CHECK(eliminate_modulo(q, alpha).is_zero());
}
