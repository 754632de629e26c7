#include "godel/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "godel/errors.hpp"

namespace godel {

namespace {

// The Def-2.2 data of an assignment, spelled out: every pairwise comparison
// between variable values plus each value's comparisons with 0 and top.
// Equal keys <=> equivalent assignments.
std::string relation_key(const std::vector<int>& values, int top) {
  const std::size_t n = values.size();
  std::string key;
  key.reserve(n * (n + 3) / 2 + n);
  for (std::size_t i = 0; i < n; ++i) {
    key += values[i] == 0 ? 'z' : values[i] == top ? 't' : 'm';
    for (std::size_t j = i + 1; j < n; ++j)
      key += values[i] < values[j] ? '<' : values[i] > values[j] ? '>' : '=';
  }
  return key;
}

// Independent pattern construction: bucket the variables by value and read
// the buckets off in value order.
OrderPattern pattern_from_values(int n, const std::vector<int>& values, int top) {
  std::map<int, std::vector<int>> buckets;
  for (int var = 1; var <= n; ++var) buckets[values[static_cast<std::size_t>(var - 1)]].push_back(var);
  std::vector<int> zero_block;
  std::vector<std::vector<int>> middle;
  std::vector<int> one_block;
  for (auto& [value, vars] : buckets) {
    if (value == 0)
      zero_block = std::move(vars);
    else if (value == top)
      one_block = std::move(vars);
    else
      middle.push_back(std::move(vars));
  }
  return OrderPattern::from_blocks(n, zero_block, middle, one_block);
}

}  // namespace

ClassCensus census(const Formula& f, int n, int k, std::uint64_t max_assignments) {
  if (n < 1) throw std::invalid_argument("census: n must be >= 1");
  if (k < 1) throw std::invalid_argument("census: k must be >= 1");
  const CompiledFormula cf(f);
  if (cf.max_var() > n)
    throw std::invalid_argument("census: formula references a variable beyond n");

  std::uint64_t grid = 1;
  for (int i = 0; i < n; ++i) {
    grid *= static_cast<std::uint64_t>(k) + 1;
    if (grid > max_assignments)
      throw GuardExceeded("census: (k+1)^n exceeds the guard of " +
                          std::to_string(max_assignments) + " assignments");
  }

  ClassCensus out;
  out.n = n;
  out.k = k;
  out.formula = to_string(f);

  struct ClassInfo {
    std::size_t ordinal;
    bool satisfied;
  };
  std::unordered_map<std::string, ClassInfo> seen;
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  const int top = k;
  for (;;) {
    const bool satisfied = cf.eval(values, top, stack) == top;
    std::string key = relation_key(values, top);
    const auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), ClassInfo{out.classes.size(), satisfied});
      OrderPattern pattern = pattern_from_values(n, values, top);
      if (satisfied) out.satisfied_classes.push_back(pattern);
      out.classes.push_back(std::move(pattern));
    } else if (it->second.satisfied != satisfied) {
      throw std::logic_error("census: truth value varies within an equivalence class");
    }

    int pos = n - 1;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == top) {
      values[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++values[static_cast<std::size_t>(pos)];
  }
  return out;
}

BigInt brute_chi(const Formula& f, int n, int k, std::uint64_t max_assignments) {
  return BigInt(census(f, n, k, max_assignments).satisfied_classes.size());
}

BigInt brute_class_count(int n, int k, std::uint64_t max_assignments) {
  return BigInt(census(Formula::top(), n, k, max_assignments).classes.size());
}

bool brute_equivalence(const LevelAssignment& a, const LevelAssignment& b) {
  if (a.n != b.n) throw std::invalid_argument("brute_equivalence: variable counts differ");
  if (a.top != b.top) throw std::invalid_argument("brute_equivalence: tops differ");
  const std::size_t n = a.values.size();

  // If any permutation sorts both lists compatibly, this one does: order by
  // a's value, ties by b's value.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (a.values[i] != a.values[j]) return a.values[i] < a.values[j];
    if (b.values[i] != b.values[j]) return b.values[i] < b.values[j];
    return i < j;
  });

  // b must come out sorted too, and the two </= chains through 0 and top
  // must agree position by position.
  int previous_a = 0;
  int previous_b = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const int value_a = a.values[order[r]];
    const int value_b = b.values[order[r]];
    if (value_b < previous_b) return false;
    const bool step_a = value_a > previous_a;
    const bool step_b = value_b > previous_b;
    if (step_a != step_b) return false;
    previous_a = value_a;
    previous_b = value_b;
  }
  return (previous_a == a.top) == (previous_b == b.top);
}

}  // namespace godel
