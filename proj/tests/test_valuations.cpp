#include <random>

#include "doctest.h"
#include "godel/characteristics.hpp"
#include "godel/counting.hpp"
#include "godel/valuations.hpp"
#include "support/random_formulas.hpp"

using godel::OrderPattern;
using godel::Rational;
using godel::Valuation;

TEST_SUITE("valuations") {

TEST_CASE("chi as weights: one per pattern up to height k") {
  const Valuation v1 = godel::chi_as_valuation(1, 1);
  const auto patterns = godel::all_patterns(1, 2, 10);
  REQUIRE(patterns.size() == 3);
  CHECK(v1.weight(patterns[0]) == 1);
  CHECK(v1.weight(patterns[1]) == 1);
  CHECK(v1.weight(patterns[2]) == 0);  // the height-2 class

  const Valuation v2 = godel::chi_as_valuation(1, 2);
  for (const auto& p : patterns) CHECK(v2.weight(p) == 1);

  const Valuation v3 = godel::chi_as_valuation(2, 3);
  int ones = 0;
  for (const auto& p : godel::all_patterns(2, 3, 100))
    if (v3.weight(p) == 1) ++ones;
  CHECK(ones == 11);

  CHECK_THROWS_AS(godel::chi_as_valuation(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(godel::chi_as_valuation(1, 0), std::invalid_argument);
}

TEST_CASE("value at a pattern walks the ancestor chain") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      const Valuation chi_k = godel::chi_as_valuation(n, k);
      godel::for_each_pattern(n, n + 1, [&](const OrderPattern& p) {
        CHECK(godel::value_at_pattern(chi_k, p) == std::min(p.height(), k));
        return true;
      });
    }
  }
}

TEST_CASE("value at a formula recovers chi") {
  std::mt19937 rng(7776);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      const Valuation nu = godel::chi_as_valuation(n, k);
      for (int round = 0; round < 20; ++round) {
        const godel::Formula f = testsupport::random_formula(rng, 4, n);
        CHECK(godel::value_at_formula(nu, f) == Rational(godel::chi(f, n, k)));
      }
    }
}

TEST_CASE("indicators answer satisfaction questions") {
  const OrderPattern p = godel::pattern_of(godel::LevelAssignment(2, 2, {1, 2}));
  const Valuation e = Valuation::indicator(p);
  CHECK(godel::value_at_pattern(e, p) == 1);
  CHECK(godel::value_at_formula(e, godel::parse("X2")) == 1);
  CHECK(godel::value_at_formula(e, godel::parse("X1")) == 0);
  CHECK(godel::value_at_formula(e, godel::parse("~X1")) == 0);

  const Valuation zero(2);
  CHECK(godel::value_at_formula(zero, godel::parse("1")) == 0);
}

TEST_CASE("the modular law holds for arbitrary weight assignments") {
  std::mt19937 rng(123581321);
  const auto patterns = godel::all_patterns(3, 4, 100);
  for (int round = 0; round < 40; ++round) {
    Valuation nu(3);
    for (const auto& p : patterns) {
      const int numerator = std::uniform_int_distribution<int>(-6, 6)(rng);
      const int denominator = std::uniform_int_distribution<int>(1, 4)(rng);
      nu.set_weight(p, Rational(numerator, denominator));
    }
    const godel::Formula f = testsupport::random_formula(rng, 3, 3);
    const godel::Formula g = testsupport::random_formula(rng, 3, 3);
    const Rational lhs = godel::value_at_formula(nu, godel::Formula::disj(f, g)) +
                         godel::value_at_formula(nu, godel::Formula::conj(f, g));
    const Rational rhs =
        godel::value_at_formula(nu, f) + godel::value_at_formula(nu, g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the maximal chain climbs one height per step") {
  for (int n = 1; n <= 6; ++n) {
    const auto chain = godel::maximal_chain(n);
    REQUIRE(chain.size() == static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n + 1; ++i) CHECK(chain[i - 1].height() == i);
    for (int i = 0; i < n; ++i) {
      const auto parent = chain[i + 1].parent();
      REQUIRE(parent.has_value());
      CHECK(*parent == chain[i]);
    }
  }
}

TEST_CASE("the two smallest chains are the expected patterns") {
  const auto chain1 = godel::maximal_chain(1);
  CHECK(chain1[0].to_string() == "({} | [] | {1})");
  CHECK(chain1[1].to_string() == "({} | [{1}] | {})");
  const auto chain2 = godel::maximal_chain(2);
  CHECK(chain2[0].to_string() == "({} | [] | {1,2})");
  CHECK(chain2[1].to_string() == "({} | [{2}] | {1})");
  CHECK(chain2[2].to_string() == "({} | [{2},{1}] | {})");
}

TEST_CASE("chi values along the chain follow min(i,k)") {
  for (int n = 1; n <= 5; ++n) {
    const auto chain = godel::maximal_chain(n);
    for (int k = 1; k <= n + 1; ++k) {
      const Valuation chi_k = godel::chi_as_valuation(n, k);
      for (int i = 1; i <= n + 1; ++i)
        CHECK(godel::value_at_pattern(chi_k, chain[i - 1]) == std::min(i, k));
    }
  }
}

TEST_CASE("the independence system is the min(i,k) matrix") {
  const godel::LinearSystem one = godel::independence_matrix(1);
  CHECK(one.matrix == std::vector<std::vector<Rational>>{{1, 1}, {1, 2}});
  const godel::LinearSystem two = godel::independence_matrix(2);
  CHECK(two.matrix ==
        std::vector<std::vector<Rational>>{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}});
  for (int n = 1; n <= 8; ++n) {
    const godel::LinearSystem sys = godel::independence_matrix(n);
    for (std::size_t i = 0; i < sys.matrix.size(); ++i)
      CHECK(sys.matrix[i][i] == Rational(static_cast<int>(i) + 1));
  }
}

TEST_CASE("determinants: pinned cases and the independence family") {
  godel::LinearSystem identity;
  identity.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(godel::determinant(identity) == 1);

  godel::LinearSystem diagonal;
  diagonal.matrix = {{2, 0}, {0, 3}};
  CHECK(godel::determinant(diagonal) == 6);

  godel::LinearSystem singular;
  singular.matrix = {{1, 1}, {1, 1}};
  CHECK(godel::determinant(singular) == 0);

  godel::LinearSystem swapped;
  swapped.matrix = {{0, 1}, {1, 0}};
  CHECK(godel::determinant(swapped) == -1);

  godel::LinearSystem fractional;
  fractional.matrix = {{Rational(1, 2), 0}, {0, 4}};
  CHECK(godel::determinant(fractional) == 2);

  godel::LinearSystem ragged;
  ragged.matrix = {{1, 2}};
  CHECK_THROWS_AS(godel::determinant(ragged), std::invalid_argument);

  for (int n = 1; n <= 10; ++n)
    CHECK(godel::determinant(godel::independence_matrix(n)) == 1);
}

TEST_CASE("orbit counting: pinned dimensions and strict inclusions") {
  CHECK(godel::invariant_dimension(1) == 3);
  CHECK(godel::invariant_dimension(2) == 7);
  godel::CountTable counts;
  for (int n = 2; n <= 3; ++n) {
    const godel::BigInt full = counts.class_count(n, n + 1);
    const godel::BigInt orbits(godel::invariant_dimension(n));
    CHECK(godel::BigInt(n + 1) < orbits);
    CHECK(orbits < full);
  }
  const godel::SpaceDims d = godel::space_dims(2);
  CHECK(d.c == 3);
  CHECK(d.i_perm == 7);
  CHECK(d.v == 11);
}

TEST_CASE("chi is permutation invariant; lopsided indicators are not") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n + 1; ++k) CHECK(godel::is_invariant(godel::chi_as_valuation(n, k)));

  const OrderPattern lopsided = godel::pattern_of(godel::LevelAssignment(2, 2, {0, 2}));
  CHECK_FALSE(godel::is_invariant(Valuation::indicator(lopsided)));

  const OrderPattern all_zero = godel::pattern_of(godel::LevelAssignment(2, 1, {0, 0}));
  CHECK(godel::is_invariant(Valuation::indicator(all_zero)));
}

TEST_CASE("span membership: combinations pass, the invariant outlier fails") {
  const auto direct = godel::in_span_of_chis(godel::chi_as_valuation(2, 2));
  REQUIRE(direct.has_value());
  CHECK(*direct == std::vector<Rational>{0, 1, 0});

  const Valuation combo =
      godel::chi_as_valuation(2, 1) * Rational(2) - godel::chi_as_valuation(2, 2);
  const auto mixed = godel::in_span_of_chis(combo);
  REQUIRE(mixed.has_value());
  CHECK(*mixed == std::vector<Rational>{2, -1, 0});

  // Permutation-invariant yet outside the span: the class with every
  // variable at falsum.
  const OrderPattern all_zero = godel::pattern_of(godel::LevelAssignment(2, 1, {0, 0}));
  const Valuation outlier = Valuation::indicator(all_zero);
  CHECK(godel::is_invariant(outlier));
  CHECK_FALSE(godel::in_span_of_chis(outlier).has_value());
}

TEST_CASE("span solves recover random coefficients exactly") {
  std::mt19937 rng(31337);
  for (int n = 1; n <= 3; ++n) {
    for (int round = 0; round < 10; ++round) {
      std::vector<Rational> want;
      Valuation nu(n);
      for (int k = 1; k <= n + 1; ++k) {
        const Rational r(std::uniform_int_distribution<int>(-5, 5)(rng),
                         std::uniform_int_distribution<int>(1, 3)(rng));
        want.push_back(r);
        nu += godel::chi_as_valuation(n, k) * r;
      }
      const auto got = godel::in_span_of_chis(nu);
      REQUIRE(got.has_value());
      CHECK(*got == want);
    }
  }
}

TEST_CASE("valuation arithmetic respects evaluation") {
  std::mt19937 rng(55);
  const Valuation a = godel::chi_as_valuation(2, 1);
  const Valuation b = godel::chi_as_valuation(2, 3);
  for (int round = 0; round < 30; ++round) {
    const godel::Formula f = testsupport::random_formula(rng, 4, 2);
    CHECK(godel::value_at_formula(a + b, f) ==
          godel::value_at_formula(a, f) + godel::value_at_formula(b, f));
    CHECK(godel::value_at_formula(a - b, f) ==
          godel::value_at_formula(a, f) - godel::value_at_formula(b, f));
    CHECK(godel::value_at_formula(a * Rational(3, 2), f) ==
          godel::value_at_formula(a, f) * Rational(3, 2));
  }
}

TEST_CASE("dense operations respect the pattern guard") {
  CHECK_THROWS_AS(godel::chi_as_valuation(7, 8), godel::GuardExceeded);
  CHECK_THROWS_AS(godel::in_span_of_chis(Valuation(7)), godel::GuardExceeded);
  CHECK_THROWS_AS(godel::invariant_dimension(7), godel::GuardExceeded);
  CHECK_NOTHROW(godel::invariant_dimension(7, 200000));
}

TEST_CASE("mismatched sizes are rejected") {
  CHECK_THROWS_AS(Valuation(2) += Valuation(3), std::invalid_argument);
  const OrderPattern p = godel::pattern_of(godel::LevelAssignment(2, 1, {0, 0}));
  Valuation nu(3);
  CHECK_THROWS_AS(nu.set_weight(p, 1), std::invalid_argument);
  CHECK_THROWS_AS(godel::value_at_formula(Valuation(1), godel::parse("X2")),
                  std::invalid_argument);
}

}  // TEST_SUITE
