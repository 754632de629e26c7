#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "godel/formula.hpp"
#include "godel/numbers.hpp"
#include "godel/patterns.hpp"
#include "godel/semantics.hpp"

namespace godel {

/// Ceiling on (k+1)^n for the exhaustive scans below.
inline constexpr std::uint64_t kOracleAssignmentGuard = 10'000'000;

/// What an exhaustive scan of all (k+1)-valued assignments saw: every
/// equivalence class reached (order of first appearance) and the subset
/// making the formula true.
struct ClassCensus {
  int n = 0;
  int k = 0;
  std::string formula;
  std::vector<OrderPattern> classes;
  std::vector<OrderPattern> satisfied_classes;
};

/// Walks the full (k+1)^n assignment grid, deciding equivalence by the
/// induced strict/equal relations among the variable values and the two
/// constants — not by the pattern enumerator. Every assignment's truth
/// value is checked against its class, so a class with inconsistent truth
/// values aborts the census.
ClassCensus census(const Formula& f, int n, int k,
                   std::uint64_t max_assignments = kOracleAssignmentGuard);

/// Classes of height <= k satisfying f, the long way around.
BigInt brute_chi(const Formula& f, int n, int k,
                 std::uint64_t max_assignments = kOracleAssignmentGuard);

/// Number of equivalence classes of (k+1)-valued assignments; must agree
/// with P(n,k).
BigInt brute_class_count(int n, int k,
                         std::uint64_t max_assignments = kOracleAssignmentGuard);

/// Decides equivalence of two assignments directly: one permutation must
/// sort both value lists while inducing identical </= chains through 0 and
/// top. Requires equal n and equal top.
bool brute_equivalence(const LevelAssignment& a, const LevelAssignment& b);

}  // namespace godel
