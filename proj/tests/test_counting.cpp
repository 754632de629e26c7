#include <array>
#include <cstdint>

#include "doctest.h"
#include "godel/counting.hpp"
#include "godel/patterns.hpp"

using godel::BigInt;
using godel::CountTable;

namespace {

// The 9x7 grid of P(n,k) reference values.
constexpr std::array<std::array<std::uint64_t, 7>, 9> kReferenceP = {{
    {2, 3, 3, 3, 3, 3, 3},
    {4, 9, 11, 11, 11, 11, 11},
    {8, 27, 45, 51, 51, 51, 51},
    {16, 81, 191, 275, 299, 299, 299},
    {32, 243, 813, 1563, 2043, 2163, 2163},
    {64, 729, 3431, 8891, 14771, 18011, 18731},
    {128, 2187, 14325, 49731, 106851, 158931, 184131},
    {256, 6561, 59231, 272675, 757019, 1407179, 1921259},
    {512, 19683, 242973, 1468203, 5228043, 12200883, 20214483},
}};

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("binomials come off the shared triangle") {
  CountTable counts;
  CHECK(counts.binomial(0, 0) == 1);
  CHECK(counts.binomial(5, 2) == 10);
  CHECK(counts.binomial(10, 5) == 252);
  CHECK(counts.binomial(5, 6) == 0);
  CHECK(counts.binomial(5, -1) == 0);
  CHECK(counts.binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("tree counts satisfy the base cases and recursion") {
  CountTable counts;
  CHECK(counts.tree_count(0, 1) == 1);
  CHECK(counts.tree_count(1, 1) == 1);
  CHECK(counts.tree_count(1, 2) == 1);
  CHECK(counts.tree_count(2, 2) == 3);
  CHECK(counts.tree_count(0, 2) == 0);
  CHECK(counts.tree_count(3, 5) == 0);
  for (int n = 0; n <= 9; ++n)
    for (int k = 2; k <= n + 1; ++k) {
      BigInt sum = 0;
      for (int i = 1; i <= n; ++i) sum += counts.binomial(n, i) * counts.tree_count(n - i, k - 1);
      CHECK(counts.tree_count(n, k) == sum);
    }
}

TEST_CASE("class counts reproduce the full 9x7 reference grid") {
  CountTable counts;
  const auto table = counts.class_table(9, 7);
  REQUIRE(table.size() == 9);
  for (int n = 1; n <= 9; ++n) {
    REQUIRE(table[static_cast<std::size_t>(n - 1)].size() == 7);
    for (int k = 1; k <= 7; ++k) {
      CHECK(table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] ==
            kReferenceP[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)]);
    }
  }
}

TEST_CASE("the first column is 2^n") {
  CountTable counts;
  for (int n = 1; n <= 12; ++n) CHECK(counts.class_count(n, 1) == BigInt(1) << n);
}

TEST_CASE("class counts are monotone in k and stabilize at k = n+1") {
  CountTable counts;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k)
      CHECK(counts.class_count(n, k) <= counts.class_count(n, k + 1));
    const BigInt ceiling = counts.class_count(n, n + 1);
    for (int k = n + 1; k <= n + 5; ++k) CHECK(counts.class_count(n, k) == ceiling);
  }
}

TEST_CASE("summing tree heights recovers the stabilized class count") {
  CountTable counts;
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (int j = 0; j <= n; ++j) {
      BigInt tree_nodes = 0;
      for (int k = 1; k <= j + 1; ++k) tree_nodes += counts.tree_count(j, k);
      total += counts.binomial(n, j) * tree_nodes;
    }
    CHECK(total == counts.class_count(n, n + 1));
  }
}

TEST_CASE("tree tables zero out beyond height n+1") {
  CountTable counts;
  const auto table = counts.tree_table(2, 4);
  REQUIRE(table.size() == 2);
  CHECK(table[0] == std::vector<BigInt>{1, 1, 0, 0});
  CHECK(table[1] == std::vector<BigInt>{1, 3, 2, 0});
}

TEST_CASE("the recursion matches a fresh enumeration") {
  CountTable counts;
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n + 1; ++k)
      CHECK(counts.class_count(n, k) == BigInt(godel::count_patterns(n, k)));
}

TEST_CASE("argument validation") {
  CountTable counts;
  CHECK_THROWS_AS(counts.tree_count(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(counts.tree_count(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(counts.class_count(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(counts.class_count(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(counts.class_table(0, 1), std::invalid_argument);
}

}  // TEST_SUITE
