#include <random>

#include "doctest.h"
#include "godel/characteristics.hpp"
#include "godel/counting.hpp"
#include "godel/formula.hpp"
#include "godel/oracle.hpp"
#include "support/random_formulas.hpp"

using godel::BigInt;
using godel::Formula;

TEST_SUITE("characteristics") {

TEST_CASE("the double-negation chain: 1, then 2 forever") {
  const Formula f = godel::parse("~~X1");
  CHECK(godel::chi(f, 1, 1) == 1);
  CHECK(godel::chi(f, 1, 2) == 2);
  CHECK(godel::chi(f, 1, 3) == 2);   // k clamps to n+1
  CHECK(godel::chi(f, 1, 10) == 2);
}

TEST_CASE("excluded middle holds classically but not at three values") {
  const Formula f = godel::parse("X1 | ~X1");
  CHECK(godel::chi(f, 1, 1) == 2);
  CHECK(godel::chi(f, 1, 2) == 2);  // the strictly-intermediate class fails
  const godel::ChiReport report = godel::chi_vector(f, 1);
  CHECK(report.classical_tautology);
  CHECK_FALSE(report.godel_infinity_tautology);
  CHECK(report.least_k_not_tautology == 2);
}

TEST_CASE("constants report at the extremes") {
  const godel::ChiReport bottom = godel::chi_vector(godel::parse("0"), 2);
  CHECK(bottom.chi == std::vector<BigInt>{0, 0, 0});
  CHECK(bottom.classical_contradiction);
  CHECK_FALSE(bottom.classical_tautology);
  CHECK(bottom.least_k_not_tautology == 1);

  const godel::ChiReport top = godel::chi_vector(godel::parse("1"), 2);
  CHECK(top.chi == std::vector<BigInt>{4, 9, 11});
  CHECK(top.chi == top.p_row);
  CHECK(top.classical_tautology);
  CHECK(top.godel_infinity_tautology);
  CHECK_FALSE(top.least_k_not_tautology.has_value());
}

TEST_CASE("prelinearity is sound everywhere; double-negation elimination is not") {
  const godel::ChiReport pre = godel::chi_vector(godel::parse("(X1 -> X2) | (X2 -> X1)"), 2);
  CHECK(pre.chi == std::vector<BigInt>{4, 9, 11});
  CHECK(pre.godel_infinity_tautology);
  CHECK(godel::is_tautology_ginf(godel::parse("(X1 -> X2) | (X2 -> X1)"), 2));

  CHECK_FALSE(godel::is_tautology_ginf(godel::parse("~~X1 -> X1"), 1));
  CHECK(godel::is_tautology_ginf(godel::parse("X1 -> X1"), 1));
}

TEST_CASE("the k-chain axiom instance flips exactly past its logic") {
  const Formula axiom = godel::parse("X1 | (X1 -> X2) | ((X1 & X2) -> X3)");
  CHECK(godel::is_tautology_gk(axiom, 3, 2));
  CHECK_FALSE(godel::is_tautology_gk(axiom, 3, 3));
  CHECK(godel::chi(axiom, 3, 2) == 27);
  CHECK(godel::chi(axiom, 3, 3) < 45);
}

TEST_CASE("tautology at n+1 values implies tautology at every k") {
  std::mt19937 rng(90210);
  int hits = 0;
  for (int round = 0; round < 400; ++round) {
    const Formula f = testsupport::random_formula(rng, 4, 2);
    if (!godel::is_tautology_ginf(f, 2)) continue;
    ++hits;
    for (int k = 1; k <= 3; ++k) CHECK(godel::is_tautology_gk(f, 2, k));
  }
  CHECK(hits > 0);  // the corpus does produce tautologies
}

TEST_CASE("chi agrees with the exhaustive oracle on a random corpus") {
  std::mt19937 rng(1729);
  for (int round = 0; round < 120; ++round) {
    const Formula f = testsupport::random_formula(rng, 4, 3);
    for (int k = 1; k <= 4; ++k) CHECK(godel::chi(f, 3, k) == godel::brute_chi(f, 3, k));
  }
}

TEST_CASE("chi_1 counts boolean models") {
  std::mt19937 rng(8128);
  for (int round = 0; round < 150; ++round) {
    const Formula f = testsupport::random_formula(rng, 4, 4);
    CHECK(godel::chi(f, 4, 1) == godel::boolean_models(f, 4));
  }
}

TEST_CASE("the chain is monotone and bounded by the class counts") {
  std::mt19937 rng(33550336);
  godel::CountTable counts;
  for (int round = 0; round < 60; ++round) {
    const Formula f = testsupport::random_formula(rng, 4, 3);
    const godel::ChiReport report = godel::chi_vector(f, 3);
    for (int k = 1; k <= 4; ++k) {
      CHECK(report.chi[k - 1] <= report.p_row[k - 1]);
      CHECK(report.p_row[k - 1] == counts.class_count(3, k));
      if (k > 1) CHECK(report.chi[k - 2] <= report.chi[k - 1]);
    }
  }
}

TEST_CASE("the valuation law holds for every k") {
  std::mt19937 rng(6174);
  for (int round = 0; round < 80; ++round) {
    const Formula f = testsupport::random_formula(rng, 3, 3);
    const Formula g = testsupport::random_formula(rng, 3, 3);
    const Formula join = Formula::disj(f, g);
    const Formula meet = Formula::conj(f, g);
    for (int k = 1; k <= 4; ++k)
      CHECK(godel::chi(join, 3, k) + godel::chi(meet, 3, k) ==
            godel::chi(f, 3, k) + godel::chi(g, 3, k));
  }
}

TEST_CASE("renaming variables never changes chi") {
  std::mt19937 rng(1089);
  const godel::Permutation sigma({2, 3, 1});
  for (int round = 0; round < 60; ++round) {
    const Formula f = testsupport::random_formula(rng, 4, 3);
    for (int k = 1; k <= 4; ++k)
      CHECK(godel::chi(godel::rename(f, sigma), 3, k) == godel::chi(f, 3, k));
  }
}

TEST_CASE("widening the ambient variable set rescales the chain") {
  // chi depends on n, not just on the variables that occur.
  const Formula top = godel::parse("1");
  CHECK(godel::chi(top, 1, 1) == 2);
  CHECK(godel::chi(top, 2, 1) == 4);
  CHECK(godel::chi(top, 3, 2) == 27);
}

TEST_CASE("equivalence is decided over all classes") {
  CHECK(godel::equivalent(godel::parse("~X1"), godel::parse("~~~X1"), 1));
  CHECK_FALSE(godel::equivalent(godel::parse("X1"), godel::parse("~~X1"), 1));
  CHECK(godel::equivalent(godel::parse("X1 & X2"), godel::parse("X2 & X1"), 2));
  CHECK(godel::equivalent(godel::parse("X1 -> X2 -> X1"), godel::parse("1"), 2));

  std::mt19937 rng(28);
  for (int round = 0; round < 50; ++round) {
    const Formula f = testsupport::random_formula(rng, 4, 3);
    CHECK(godel::equivalent(f, f, 3));
    CHECK(godel::equivalent(Formula::disj(f, f), f, 3));
    // Equivalent formulas have identical chains.
    const godel::ChiReport a = godel::chi_vector(Formula::conj(f, f), 3);
    const godel::ChiReport b = godel::chi_vector(f, 3);
    CHECK(a.chi == b.chi);
  }
}

TEST_CASE("threaded and sequential scans agree") {
  // Large enough to cross the parallel threshold.
  const Formula f = godel::parse("(X1 -> X2) | (X2 -> X3) | (X3 -> X4)");
  const BigInt sequential = godel::chi(f, 7, 8, 1);
  const BigInt threaded = godel::chi(f, 7, 8, 4);
  CHECK(sequential == threaded);
  const godel::ChiReport report = godel::chi_vector(f, 7, 4);
  CHECK(report.chi.back() == sequential);
}

TEST_CASE("the json report uses the pinned schema") {
  const nlohmann::json j = godel::to_json(godel::chi_vector(godel::parse("~~X1"), 1));
  CHECK(j.at("formula") == "~~X1");
  CHECK(j.at("n") == 1);
  CHECK(j.at("chi") == nlohmann::json::array({"1", "2"}));
  CHECK(j.at("p") == nlohmann::json::array({"2", "3"}));
  CHECK(j.at("boolean_models") == "1");
  CHECK(j.at("classical_tautology") == false);
  CHECK(j.at("classical_contradiction") == false);
  CHECK(j.at("godel_infinity_tautology") == false);
  CHECK(j.at("least_k_not_tautology") == 1);

  const nlohmann::json taut = godel::to_json(godel::chi_vector(godel::parse("X1 -> X1"), 1));
  CHECK(taut.at("least_k_not_tautology").is_null());
  CHECK(taut.at("godel_infinity_tautology") == true);
}

TEST_CASE("bad arguments are rejected") {
  CHECK_THROWS_AS(godel::chi(godel::parse("X2"), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(godel::chi(godel::parse("X1"), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(godel::chi(godel::parse("X1"), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(godel::chi_vector(godel::parse("X3"), 2), std::invalid_argument);
  CHECK_THROWS_AS(godel::equivalent(godel::parse("X1"), godel::parse("X3"), 2),
                  std::invalid_argument);
}

}  // TEST_SUITE
