#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "godel/formula.hpp"
#include "godel/permutation.hpp"
#include "godel/semantics.hpp"

namespace godel {

/// One equivalence class of level assignments to X1..Xn: which variables sit
/// at falsum, which at verum, and how the strictly intermediate values are
/// grouped into blocks of equal value and ordered. Stored densely as a level
/// vector: level 0 is the zero block, levels 1..m the intermediate blocks in
/// increasing order, level m+1 the one block.
///
/// Each pattern is also one join-irreducible element of the Lindenbaum
/// algebra of n-variable formulas; height() and parent() realize the forest
/// order on those elements.
class OrderPattern {
public:
  /// Throws std::invalid_argument unless levels.size() == n, every level
  /// lies in [0, num_blocks+1] and every intermediate level 1..num_blocks
  /// is occupied.
  OrderPattern(int n, int num_blocks, std::vector<int> levels);

  /// Builds from explicit blocks; the three parts must partition {1..n} and
  /// every intermediate block must be nonempty.
  static OrderPattern from_blocks(int n, const std::vector<int>& zero_block,
                                  const std::vector<std::vector<int>>& blocks,
                                  const std::vector<int>& one_block);

  int vars() const noexcept { return n_; }
  int num_blocks() const noexcept { return num_blocks_; }  // m
  int height() const noexcept { return num_blocks_ + 1; }
  std::span<const int> levels() const noexcept { return levels_; }
  int level_of(int var) const;  // 1-based

  std::vector<int> zero_block() const;
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> one_block() const;

  /// The least assignment in the class: top = height(), each variable at
  /// its block level. pattern_of(canonical_assignment()) round-trips.
  LevelAssignment canonical_assignment() const;

  /// The next join-irreducible down the forest: the highest intermediate
  /// block merged into the one block. Empty for height-1 patterns (roots).
  std::optional<OrderPattern> parent() const;

  /// Relabels every variable i as sigma(i). Requires sigma.n() == vars().
  OrderPattern apply_perm(const Permutation& sigma) const;

  /// "({1} | [{2},{4}] | {3})" style: zero block, intermediate blocks in
  /// increasing order, one block.
  std::string to_string() const;

  friend bool operator==(const OrderPattern&, const OrderPattern&) = default;

private:
  int n_;
  int num_blocks_;
  std::vector<int> levels_;
};

struct OrderPatternHash {
  std::size_t operator()(const OrderPattern& p) const noexcept;
};

/// The pattern of an assignment. Two assignments get equal patterns exactly
/// when some single permutation sorts both with identical strict/equal
/// relation chains against 0 and top.
OrderPattern pattern_of(const LevelAssignment& a);

/// Class-level satisfaction: f is true at the canonical assignment (and so
/// at every assignment of the class). Requires max_var(f) <= p.vars().
bool satisfies(const OrderPattern& p, const Formula& f);

namespace detail {

// Depth-first scan over level vectors of {1..n} into {0..m+1} that use every
// intermediate level 1..m, in lexicographic order. `visit` gets the filled
// vector and returns false to stop the whole scan. `used` has m slots of
// per-level occupancy counts for levels 1..m; `missing` counts intermediate
// levels still unused. Returns false if the visitor stopped the scan.
template <class Visit>
bool scan_levels(std::span<int> levels, std::span<int> used, int pos, int missing, int m,
                 Visit&& visit) {
  const int n = static_cast<int>(levels.size());
  if (pos == n) return missing > 0 ? true : visit(std::span<const int>(levels.data(), levels.size()));
  if (missing > n - pos) return true;  // cannot cover the remaining levels
  for (int level = 0; level <= m + 1; ++level) {
    levels[pos] = level;
    if (level >= 1 && level <= m) {
      if (++used[level - 1] == 1) --missing;
      if (!scan_levels(levels, used, pos + 1, missing, m, visit)) return false;
      if (--used[level - 1] == 0) ++missing;
    } else {
      if (!scan_levels(levels, used, pos + 1, missing, m, visit)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Scans every level vector with exactly m intermediate blocks, lexicographic
/// order. visit(std::span<const int>) -> bool; false stops the scan. Returns
/// false if stopped.
template <class Visit>
bool for_each_level_vector(int n, int m, Visit&& visit) {
  std::vector<int> levels(static_cast<std::size_t>(n), 0);
  std::vector<int> used(static_cast<std::size_t>(m), 0);
  return detail::scan_levels(std::span<int>(levels), std::span<int>(used), 0, m, m, visit);
}

/// Same, restricted to vectors with levels[0] == first. Slices partition the
/// scan for parallel counting.
template <class Visit>
bool for_each_level_vector_with_first(int n, int m, int first, Visit&& visit) {
  std::vector<int> levels(static_cast<std::size_t>(n), 0);
  std::vector<int> used(static_cast<std::size_t>(m), 0);
  levels[0] = first;
  int missing = m;
  if (first >= 1 && first <= m) {
    used[static_cast<std::size_t>(first - 1)] = 1;
    missing = m - 1;
  }
  return detail::scan_levels(std::span<int>(levels), std::span<int>(used), 1, missing, m, visit);
}

/// Streams every pattern over n variables with height <= max_height exactly
/// once: ascending block count, then lexicographic on the level vector.
/// visit(const OrderPattern&) -> bool; false stops the scan.
template <class Visit>
void for_each_pattern(int n, int max_height, Visit&& visit) {
  if (n < 1) throw std::invalid_argument("for_each_pattern: n must be >= 1");
  if (max_height < 1) throw std::invalid_argument("for_each_pattern: max_height must be >= 1");
  const int max_m = std::min(max_height - 1, n);
  for (int m = 0; m <= max_m; ++m) {
    const bool keep_going = for_each_level_vector(n, m, [&](std::span<const int> levels) {
      return visit(OrderPattern(n, m, std::vector<int>(levels.begin(), levels.end())));
    });
    if (!keep_going) return;
  }
}

/// Number of patterns with height <= max_height (the stream length).
std::uint64_t count_patterns(int n, int max_height);

/// Materializes the stream; throws GuardExceeded past max_patterns.
std::vector<OrderPattern> all_patterns(int n, int max_height, std::size_t max_patterns);

/// Dense ordinal index over all patterns of height <= max_height, in
/// enumeration order. Immutable once built.
class PatternIndex {
public:
  static PatternIndex build(int n, int max_height, std::size_t max_patterns);

  int vars() const noexcept { return n_; }
  int max_height() const noexcept { return max_height_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  const OrderPattern& at(std::size_t ordinal) const { return patterns_.at(ordinal); }
  std::optional<std::size_t> ordinal_of(const OrderPattern& p) const;

private:
  PatternIndex(int n, int max_height) : n_(n), max_height_(max_height) {}
  int n_;
  int max_height_;
  std::vector<OrderPattern> patterns_;
  std::unordered_map<OrderPattern, std::size_t, OrderPatternHash> ordinals_;
};

/// Graphviz digraph of the forest: nodes named by enumeration ordinal,
/// labeled with pattern and height, edges parent -> child.
void write_forest_dot(std::ostream& out, int n, int max_height, std::size_t max_patterns);

}  // namespace godel
