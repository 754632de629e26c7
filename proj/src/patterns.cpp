#include "godel/patterns.hpp"

#include "godel/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace godel {

OrderPattern::OrderPattern(int n, int num_blocks, std::vector<int> levels)
    : n_(n), num_blocks_(num_blocks), levels_(std::move(levels)) {
  if (n_ < 1) throw std::invalid_argument("pattern: n must be >= 1");
  if (num_blocks_ < 0 || num_blocks_ > n_)
    throw std::invalid_argument("pattern: block count out of range");
  if (static_cast<int>(levels_.size()) != n_)
    throw std::invalid_argument("pattern: expected one level per variable");
  std::vector<bool> seen(static_cast<std::size_t>(num_blocks_), false);
  for (int level : levels_) {
    if (level < 0 || level > num_blocks_ + 1)
      throw std::invalid_argument("pattern: level out of range");
    if (level >= 1 && level <= num_blocks_) seen[static_cast<std::size_t>(level - 1)] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("pattern: empty intermediate block");
}

OrderPattern OrderPattern::from_blocks(int n, const std::vector<int>& zero_block,
                                       const std::vector<std::vector<int>>& blocks,
                                       const std::vector<int>& one_block) {
  const int m = static_cast<int>(blocks.size());
  std::vector<int> levels(n < 0 ? 0 : static_cast<std::size_t>(n), -1);
  auto place = [&](const std::vector<int>& part, int level) {
    if (level >= 1 && level <= m && part.empty())
      throw std::invalid_argument("pattern: empty intermediate block");
    for (int var : part) {
      if (var < 1 || var > n) throw std::invalid_argument("pattern: variable out of range");
      int& slot = levels[static_cast<std::size_t>(var - 1)];
      if (slot != -1) throw std::invalid_argument("pattern: variable assigned twice");
      slot = level;
    }
  };
  place(zero_block, 0);
  for (int b = 0; b < m; ++b) place(blocks[static_cast<std::size_t>(b)], b + 1);
  place(one_block, m + 1);
  for (int slot : levels)
    if (slot == -1) throw std::invalid_argument("pattern: blocks do not cover {1..n}");
  return OrderPattern(n, m, std::move(levels));
}

int OrderPattern::level_of(int var) const {
  if (var < 1 || var > n_) throw std::invalid_argument("pattern: variable out of range");
  return levels_[static_cast<std::size_t>(var - 1)];
}

std::vector<int> OrderPattern::zero_block() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (levels_[static_cast<std::size_t>(i - 1)] == 0) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> OrderPattern::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks_));
  for (int i = 1; i <= n_; ++i) {
    const int level = levels_[static_cast<std::size_t>(i - 1)];
    if (level >= 1 && level <= num_blocks_) out[static_cast<std::size_t>(level - 1)].push_back(i);
  }
  return out;
}

std::vector<int> OrderPattern::one_block() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (levels_[static_cast<std::size_t>(i - 1)] == num_blocks_ + 1) out.push_back(i);
  return out;
}

LevelAssignment OrderPattern::canonical_assignment() const {
  return LevelAssignment(n_, num_blocks_ + 1, levels_);
}

std::optional<OrderPattern> OrderPattern::parent() const {
  if (num_blocks_ == 0) return std::nullopt;
  // Merge the highest intermediate block into the one block: both old levels
  // m and m+1 become the new top m.
  std::vector<int> levels = levels_;
  for (int& level : levels) level = std::min(level, num_blocks_);
  return OrderPattern(n_, num_blocks_ - 1, std::move(levels));
}

OrderPattern OrderPattern::apply_perm(const Permutation& sigma) const {
  if (sigma.n() != n_) throw std::invalid_argument("apply_perm: permutation size mismatch");
  std::vector<int> levels(levels_.size());
  for (int i = 1; i <= n_; ++i)
    levels[static_cast<std::size_t>(sigma.apply(i) - 1)] = levels_[static_cast<std::size_t>(i - 1)];
  return OrderPattern(n_, num_blocks_, std::move(levels));
}

namespace {

void append_set(std::string& out, const std::vector<int>& vars) {
  out += '{';
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vars[i]);
  }
  out += '}';
}

}  // namespace

std::string OrderPattern::to_string() const {
  std::string out = "(";
  append_set(out, zero_block());
  out += " | [";
  const auto mid = blocks();
  for (std::size_t b = 0; b < mid.size(); ++b) {
    if (b > 0) out += ',';
    append_set(out, mid[b]);
  }
  out += "] | ";
  append_set(out, one_block());
  out += ')';
  return out;
}

std::size_t OrderPatternHash::operator()(const OrderPattern& p) const noexcept {
  // FNV-1a over the level vector.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(p.vars()));
  mix(static_cast<std::uint64_t>(p.num_blocks()));
  for (int level : p.levels()) mix(static_cast<std::uint64_t>(level));
  return static_cast<std::size_t>(h);
}

OrderPattern pattern_of(const LevelAssignment& a) {
  if (a.n < 1) throw std::invalid_argument("pattern_of: assignment has no variables");
  // Rank the strictly intermediate values in increasing order.
  std::vector<int> interior;
  for (int v : a.values)
    if (v > 0 && v < a.top) interior.push_back(v);
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  const int m = static_cast<int>(interior.size());
  std::vector<int> levels(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const int v = a.values[i];
    if (v == 0) {
      levels[i] = 0;
    } else if (v == a.top) {
      levels[i] = m + 1;
    } else {
      const auto it = std::lower_bound(interior.begin(), interior.end(), v);
      levels[i] = static_cast<int>(it - interior.begin()) + 1;
    }
  }
  return OrderPattern(a.n, m, std::move(levels));
}

bool satisfies(const OrderPattern& p, const Formula& f) {
  CompiledFormula cf(f);
  if (cf.max_var() > p.vars())
    throw std::invalid_argument("satisfies: formula references a variable beyond the pattern");
  const int top = p.height();
  return cf.eval(p.levels(), top) == top;
}

std::uint64_t count_patterns(int n, int max_height) {
  std::uint64_t count = 0;
  for_each_pattern(n, max_height, [&](const OrderPattern&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<OrderPattern> all_patterns(int n, int max_height, std::size_t max_patterns) {
  std::vector<OrderPattern> out;
  bool overflow = false;
  for_each_pattern(n, max_height, [&](const OrderPattern& p) {
    if (out.size() >= max_patterns) {
      overflow = true;
      return false;
    }
    out.push_back(p);
    return true;
  });
  if (overflow)
    throw GuardExceeded("pattern enumeration exceeds the resource guard of " +
                        std::to_string(max_patterns) + " patterns");
  return out;
}

PatternIndex PatternIndex::build(int n, int max_height, std::size_t max_patterns) {
  PatternIndex index(n, max_height);
  index.patterns_ = all_patterns(n, max_height, max_patterns);
  index.ordinals_.reserve(index.patterns_.size());
  for (std::size_t i = 0; i < index.patterns_.size(); ++i)
    index.ordinals_.emplace(index.patterns_[i], i);
  return index;
}

std::optional<std::size_t> PatternIndex::ordinal_of(const OrderPattern& p) const {
  const auto it = ordinals_.find(p);
  if (it == ordinals_.end()) return std::nullopt;
  return it->second;
}

void write_forest_dot(std::ostream& out, int n, int max_height, std::size_t max_patterns) {
  const PatternIndex index = PatternIndex::build(n, max_height, max_patterns);
  out << "digraph forest {\n";
  for (std::size_t i = 0; i < index.size(); ++i) {
    const OrderPattern& p = index.at(i);
    out << "  " << i << " [label=\"" << p.to_string() << " h=" << p.height() << "\"];\n";
  }
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto parent = index.at(i).parent();
    if (!parent) continue;
    const auto parent_ordinal = index.ordinal_of(*parent);
    if (parent_ordinal) out << "  " << *parent_ordinal << " -> " << i << ";\n";
  }
  out << "}\n";
}

}  // namespace godel
