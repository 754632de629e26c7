#include "godel/valuations.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "godel/counting.hpp"
#include "godel/semantics.hpp"

namespace godel {

Valuation::Valuation(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
}

Rational Valuation::weight(const OrderPattern& p) const {
  const auto it = weights_.find(p);
  return it == weights_.end() ? Rational(0) : it->second;
}

void Valuation::set_weight(const OrderPattern& p, Rational w) {
  if (p.vars() != n_) throw std::invalid_argument("valuation: pattern size mismatch");
  if (w == 0)
    weights_.erase(p);
  else
    weights_.insert_or_assign(p, std::move(w));
}

Valuation Valuation::indicator(const OrderPattern& p) {
  Valuation nu(p.vars());
  nu.set_weight(p, 1);
  return nu;
}

Valuation& Valuation::operator+=(const Valuation& other) {
  if (other.n_ != n_) throw std::invalid_argument("valuation: size mismatch");
  for (const auto& [pattern, w] : other.weights_) set_weight(pattern, weight(pattern) + w);
  return *this;
}

Valuation& Valuation::operator-=(const Valuation& other) {
  if (other.n_ != n_) throw std::invalid_argument("valuation: size mismatch");
  for (const auto& [pattern, w] : other.weights_) set_weight(pattern, weight(pattern) - w);
  return *this;
}

Valuation& Valuation::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    weights_.clear();
    return *this;
  }
  for (auto& [pattern, w] : weights_) w *= scalar;
  return *this;
}

Valuation chi_as_valuation(int n, int k, std::size_t max_patterns) {
  if (k < 1 || k > n + 1)
    throw std::invalid_argument("chi_as_valuation: k must lie in [1, n+1]");
  Valuation nu(n);
  std::size_t seen = 0;
  for_each_pattern(n, k, [&](const OrderPattern& p) {
    if (++seen > max_patterns)
      throw GuardExceeded("chi_as_valuation: pattern universe exceeds the guard of " +
                          std::to_string(max_patterns));
    nu.set_weight(p, 1);
    return true;
  });
  return nu;
}

Rational value_at_pattern(const Valuation& nu, const OrderPattern& p) {
  Rational sum = nu.weight(p);
  std::optional<OrderPattern> ancestor = p.parent();
  while (ancestor) {
    sum += nu.weight(*ancestor);
    ancestor = ancestor->parent();
  }
  return sum;
}

Rational value_at_formula(const Valuation& nu, const Formula& f) {
  const CompiledFormula cf(f);
  if (cf.max_var() > nu.vars())
    throw std::invalid_argument("value_at_formula: formula references a variable beyond n");
  Rational sum = 0;
  std::vector<int> stack;
  for (const auto& [pattern, w] : nu.weights()) {
    const int top = pattern.height();
    if (cf.eval(pattern.levels(), top, stack) == top) sum += w;
  }
  return sum;
}

std::vector<OrderPattern> maximal_chain(int n) {
  if (n < 1) throw std::invalid_argument("maximal_chain: n must be >= 1");
  // c_i keeps X1..X_{n+1-i} in the one block and hangs the rest below it in
  // single-variable blocks, deepest variable last: X_n < X_{n-1} < ... < top.
  std::vector<OrderPattern> chain;
  chain.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int var = 1; var <= n; ++var)
      levels[static_cast<std::size_t>(var - 1)] = var <= n + 1 - i ? i : n + 1 - var;
    chain.emplace_back(n, i - 1, std::move(levels));
  }
  return chain;
}

LinearSystem independence_matrix(int n) {
  if (n < 1) throw std::invalid_argument("independence_matrix: n must be >= 1");
  const std::vector<OrderPattern> chain = maximal_chain(n);
  const std::size_t size = chain.size();
  LinearSystem sys;
  sys.matrix.assign(size, std::vector<Rational>(size, Rational(0)));
  sys.rhs.assign(size, Rational(0));
  for (std::size_t i = 0; i < size; ++i) {
    // Entry (i,k): chi_{k+1} at chain[i] = ancestors of height <= k+1.
    std::vector<int> heights;
    std::optional<OrderPattern> node = chain[i];
    while (node) {
      heights.push_back(node->height());
      node = node->parent();
    }
    for (std::size_t k = 0; k < size; ++k) {
      int count = 0;
      for (int h : heights)
        if (h <= static_cast<int>(k) + 1) ++count;
      sys.matrix[i][k] = count;
    }
  }
  return sys;
}

Rational determinant(const LinearSystem& sys) {
  const std::size_t size = sys.matrix.size();
  for (const auto& row : sys.matrix)
    if (row.size() != size) throw std::invalid_argument("determinant: matrix must be square");
  if (size == 0) return 1;

  std::vector<std::vector<Rational>> a = sys.matrix;
  Rational previous_pivot = 1;
  int sign = 1;
  for (std::size_t col = 0; col + 1 < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (std::size_t row = col + 1; row < size; ++row) {
      for (std::size_t c = col + 1; c < size; ++c)
        a[row][c] = (a[col][col] * a[row][c] - a[row][col] * a[col][c]) / previous_pivot;
      a[row][col] = 0;
    }
    previous_pivot = a[col][col];
  }
  return sign > 0 ? a[size - 1][size - 1] : -a[size - 1][size - 1];
}

namespace {

std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> out;
  for (int j = 1; j < n; ++j) out.push_back(Permutation::transposition(n, j, j + 1));
  return out;
}

}  // namespace

std::uint64_t invariant_dimension(int n, std::size_t max_patterns) {
  const PatternIndex index = PatternIndex::build(n, n + 1, max_patterns);
  const std::vector<Permutation> generators = adjacent_transpositions(n);
  std::vector<bool> visited(index.size(), false);
  std::uint64_t orbits = 0;
  std::vector<std::size_t> frontier;
  for (std::size_t start = 0; start < index.size(); ++start) {
    if (visited[start]) continue;
    ++orbits;
    visited[start] = true;
    frontier.assign(1, start);
    while (!frontier.empty()) {
      const std::size_t current = frontier.back();
      frontier.pop_back();
      for (const Permutation& sigma : generators) {
        const auto image = index.ordinal_of(index.at(current).apply_perm(sigma));
        if (image && !visited[*image]) {
          visited[*image] = true;
          frontier.push_back(*image);
        }
      }
    }
  }
  return orbits;
}

bool is_invariant(const Valuation& nu) {
  const std::vector<Permutation> generators = adjacent_transpositions(nu.vars());
  for (const auto& [pattern, w] : nu.weights())
    for (const Permutation& sigma : generators)
      if (nu.weight(pattern.apply_perm(sigma)) != w) return false;
  return true;
}

std::optional<std::vector<Rational>> in_span_of_chis(const Valuation& nu,
                                                     std::size_t max_patterns) {
  const int n = nu.vars();
  // Span members weigh all patterns of one height equally; find those common
  // weights or fail.
  std::vector<std::optional<Rational>> common(static_cast<std::size_t>(n) + 1);
  bool constant = true;
  std::size_t seen = 0;
  for_each_pattern(n, n + 1, [&](const OrderPattern& p) {
    if (++seen > max_patterns)
      throw GuardExceeded("in_span_of_chis: pattern universe exceeds the guard of " +
                          std::to_string(max_patterns));
    const Rational w = nu.weight(p);
    std::optional<Rational>& slot = common[static_cast<std::size_t>(p.height() - 1)];
    if (!slot) {
      slot = w;
    } else if (*slot != w) {
      constant = false;
      return false;
    }
    return true;
  });
  if (!constant) return std::nullopt;

  // nu = sum_k r_k chi_k puts weight s_h = sum_{k >= h} r_k at height h, so
  // the coefficients telescope off the common weights.
  std::vector<Rational> coefficients(static_cast<std::size_t>(n) + 1);
  Rational above = 0;  // s_{h+1}
  for (int h = n + 1; h >= 1; --h) {
    const Rational s_h = common[static_cast<std::size_t>(h - 1)].value_or(Rational(0));
    coefficients[static_cast<std::size_t>(h - 1)] = s_h - above;
    above = s_h;
  }
  return coefficients;
}

SpaceDims space_dims(int n, std::size_t max_patterns) {
  SpaceDims out;
  out.c = n + 1;
  out.i_perm = invariant_dimension(n, max_patterns);
  out.v = CountTable().class_count(n, n + 1);
  return out;
}

}  // namespace godel
