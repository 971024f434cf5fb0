#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "parafock/action.hpp"

using namespace parafock;

TEST_CASE("generator names and adjoints") {
  for (Generator g : all_generators) {
    CHECK(generator_from_string(to_string(g)) == g);
    CHECK(adjoint_of(adjoint_of(g)) == g);
  }
  CHECK(to_string(Generator::b_plus) == "b+");
  CHECK_FALSE(generator_from_string("x+").has_value());
  CHECK(grade_of(Generator::b_minus) == GradeDegree{1, 0});
  CHECK(grade_of(Generator::f_plus) == GradeDegree{0, 1});
}

TEST_CASE("raw case split before reduction") {
  const LadderAction a(ParaOrder(2));
  // b- on |2,1,alpha>: m even, sign (-1)^n = -1.
  const auto terms = a.raw(Generator::b_minus, {2, 1, Tag::alpha});
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].m == 1);
  CHECK(terms[0].tag == Tag::alpha);
  CHECK(terms[0].coeff == -2);
  CHECK(terms[1].tag == Tag::beta);
  CHECK(terms[1].coeff == 4);

  // Terms whose literal coefficient vanishes are never materialized, so
  // m = 0 never produces negative labels.
  CHECK(a.raw(Generator::b_minus, {0, 1, Tag::alpha}).empty());
  CHECK(a.raw(Generator::f_minus, {2, 0, Tag::alpha}).empty());
  CHECK(a.raw(Generator::f_plus, {2, 2, Tag::alpha}).empty());  // n = p cutoff
}

TEST_CASE("single-generator actions on small vectors") {
  for (int pv : {1, 2, 3}) {
    const ParaOrder p(pv);
    const LadderAction a(p);
    CHECK(a.act(Generator::b_minus, {1, 0, Tag::alpha}) ==
          VectorExpr::unit(vacuum_index, pv));
    CHECK(a.act(Generator::f_minus, {0, 1, Tag::alpha}) ==
          VectorExpr::unit(vacuum_index, pv));
  }

  const LadderAction a2(ParaOrder(2));
  {
    // b+ |0,1,alpha> = -|1,1,alpha> + 2 |1,1,beta> at p = 2.
    VectorExpr want = VectorExpr::unit({1, 1, Tag::alpha}, -1);
    want += VectorExpr::unit({1, 1, Tag::beta}, 2);
    CHECK(a2.act(Generator::b_plus, {0, 1, Tag::alpha}) == want);
  }
  CHECK(a2.act(Generator::f_plus, {1, 2, Tag::alpha}).is_zero());
  // f+ |1,1,beta> lands on the n = p fold: (1/2)|1,2,alpha>.
  CHECK(a2.act(Generator::f_plus, {1, 1, Tag::beta}) ==
        VectorExpr::unit({1, 2, Tag::alpha}, Rational(1) / 2));

  const LadderAction a3(ParaOrder(3));
  CHECK(a3.act(Generator::f_minus, {2, 2, Tag::alpha}) ==
        VectorExpr::unit({2, 1, Tag::alpha}, 4));

  // At p = 1 the beta component of b+ folds onto alpha with total weight +1.
  const LadderAction a1(ParaOrder(1));
  CHECK(a1.act(Generator::b_plus, {0, 1, Tag::alpha}) ==
        VectorExpr::unit({1, 1, Tag::alpha}, 1));
}

TEST_CASE("cross-oracle: b- on (1,1,alpha) carries 2 - p") {
  for (int pv : {1, 2, 3, 4, 5}) {
    const LadderAction a{ParaOrder(pv)};
    const VectorExpr got = a.act(Generator::b_minus, {1, 1, Tag::alpha});
    const VectorExpr want =
        VectorExpr::unit({0, 1, Tag::alpha}, fixtures::b_minus_on_11_alpha_coeff(pv));
    CHECK(got == want);
  }
}

TEST_CASE("the dynamic action is exact far outside any window") {
  const LadderAction a(ParaOrder(3));
  const VectorExpr big = a.act(Generator::b_plus, {50, 1, Tag::alpha});
  CHECK(big.coeff({51, 1, Tag::alpha}) == -1);
  CHECK(big.coeff({51, 1, Tag::beta}) == 2);
  CHECK(a.act(Generator::b_minus, a.act(Generator::b_plus, VectorExpr::unit({50, 2, Tag::beta})))
            .coeff({50, 2, Tag::beta}) != 0);
}

TEST_CASE("action rejects non-canonical input") {
  const LadderAction a(ParaOrder(2));
  CHECK_THROWS_AS(a.act(Generator::b_plus, BasisIndex{0, 1, Tag::beta}),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.raw(Generator::b_minus, BasisIndex{1, 3, Tag::alpha}),
                  std::invalid_argument);
}

TEST_CASE("linearity over vectors") {
  const LadderAction a(ParaOrder(2));
  VectorExpr v = VectorExpr::unit({1, 1, Tag::alpha}, Rational(1) / 3);
  v += VectorExpr::unit({1, 1, Tag::beta}, -2);
  const VectorExpr image = a.act(Generator::f_minus, v);
  VectorExpr want = (Rational(1) / 3) * a.act(Generator::f_minus, {1, 1, Tag::alpha});
  want += Rational(-2) * a.act(Generator::f_minus, {1, 1, Tag::beta});
  CHECK(image == want);
}

TEST_CASE("truncated matrices") {
  // p = 1, max_m = 1: four basis vectors, and the b+ column of (0,1,alpha)
  // has a single entry +1 at (1,1,alpha) thanks to the fold.
  const SparseOperator bp = matrix_of(ParaOrder(1), Truncation(1), Generator::b_plus);
  CHECK_FALSE(bp.boundary_exact);
  CHECK(bp.entries.at({{1, 1, Tag::alpha}, {0, 1, Tag::alpha}}) == 1);
  CHECK(bp.entries.at({{1, 0, Tag::alpha}, {0, 0, Tag::alpha}}) == 1);
  // Columns at m = max_m raise out of the window and are clipped.
  for (const auto& [key, value] : bp.entries) CHECK(key.second.m == 0);

  const SparseOperator bm = matrix_of(ParaOrder(1), Truncation(1), Generator::b_minus);
  CHECK(bm.boundary_exact);
  CHECK(bm.entries.at({{0, 0, Tag::alpha}, {1, 0, Tag::alpha}}) == 1);

  // Empty window: b+ has nowhere to land.
  CHECK(matrix_of(ParaOrder(2), Truncation(0), Generator::b_plus).entries.empty());
}

TEST_CASE("fault catalog is well formed and changes exactly the target case") {
  const auto& catalog = fault_catalog();
  CHECK(catalog.size() == 11);
  std::set<std::string> names;
  for (const Fault& f : catalog) names.insert(f.name);
  CHECK(names.size() == catalog.size());
  CHECK(fault_by_name("f+.alpha.alpha.sign").has_value());
  CHECK_FALSE(fault_by_name("no-such-fault").has_value());

  const ParaOrder p(2);
  const LadderAction clean(p);
  const LadderAction faulted(p, *fault_by_name("f+.alpha.alpha.sign"));
  CHECK(faulted.act(Generator::f_plus, {0, 0, Tag::alpha}) ==
        VectorExpr::unit({0, 1, Tag::alpha}, -1));
  // Non-matching cases are untouched.
  CHECK(faulted.act(Generator::f_plus, {1, 1, Tag::beta}) ==
        clean.act(Generator::f_plus, {1, 1, Tag::beta}));
  CHECK(faulted.act(Generator::b_minus, {2, 1, Tag::alpha}) ==
        clean.act(Generator::b_minus, {2, 1, Tag::alpha}));

  // Every fault produces a different action somewhere in a small window.
  for (const Fault& f : catalog) {
    const LadderAction broken(p, f);
    bool differs = false;
    for (const BasisIndex& idx : canonical_basis(p, Truncation(4)))
      for (Generator g : all_generators)
        if (broken.act(g, idx) != clean.act(g, idx)) differs = true;
    CHECK_MESSAGE(differs, "fault ", f.name, " is a no-op on the window");
  }
}
