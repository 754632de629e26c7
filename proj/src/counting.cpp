#include "godel/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace godel {

void CountTable::ensure_binomials(int n) const {
  for (int row = static_cast<int>(pascal_.size()); row <= n; ++row) {
    std::vector<BigInt> values(static_cast<std::size_t>(row) + 1, BigInt(1));
    for (int k = 1; k < row; ++k)
      values[static_cast<std::size_t>(k)] =
          pascal_.back()[static_cast<std::size_t>(k - 1)] + pascal_.back()[static_cast<std::size_t>(k)];
    pascal_.push_back(std::move(values));
  }
}

void CountTable::ensure_trees(int n) const {
  ensure_binomials(n);
  for (int row = static_cast<int>(trees_.size()); row <= n; ++row) {
    // Entries k = 1..row+1; everything beyond is zero.
    std::vector<BigInt> values(static_cast<std::size_t>(row) + 1);
    values[0] = 1;
    for (int k = 2; k <= row + 1; ++k) {
      BigInt sum = 0;
      for (int i = 1; i <= row; ++i) {
        const int rest = row - i;
        if (k - 1 > rest + 1) continue;
        sum += pascal_[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)] *
               trees_[static_cast<std::size_t>(rest)][static_cast<std::size_t>(k - 2)];
      }
      values[static_cast<std::size_t>(k - 1)] = std::move(sum);
    }
    trees_.push_back(std::move(values));
  }
}

void CountTable::ensure_classes(int n, int k) const {
  ensure_trees(n);
  const std::size_t slot = static_cast<std::size_t>(n - 1);
  if (classes_.size() <= slot) classes_.resize(slot + 1);
  std::vector<BigInt>& row = classes_[slot];
  const int want = std::min(k, n + 1);
  for (int next = static_cast<int>(row.size()) + 1; next <= want; ++next) {
    BigInt layer = 0;  // sum_{j=0..n} C(n,j) * T(j,next)
    for (int j = 0; j <= n; ++j) {
      if (next > j + 1) continue;
      layer += pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] *
               trees_[static_cast<std::size_t>(j)][static_cast<std::size_t>(next - 1)];
    }
    row.push_back(next == 1 ? layer : row.back() + layer);
  }
}

BigInt CountTable::binomial(int n, int k) const {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_binomials(n);
  return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt CountTable::tree_count(int n, int k) const {
  if (n < 0) throw std::invalid_argument("tree_count: n must be >= 0");
  if (k < 1) throw std::invalid_argument("tree_count: k must be >= 1");
  if (k > n + 1) return 0;
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_trees(n);
  return trees_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)];
}

BigInt CountTable::class_count(int n, int k) const {
  if (n < 1) throw std::invalid_argument("class_count: n must be >= 1");
  if (k < 1) throw std::invalid_argument("class_count: k must be >= 1");
  const int clamped = std::min(k, n + 1);
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_classes(n, clamped);
  return classes_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(clamped - 1)];
}

std::vector<std::vector<BigInt>> CountTable::class_table(int max_n, int max_k) const {
  if (max_n < 1 || max_k < 1)
    throw std::invalid_argument("class_table: bounds must be positive");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(max_k));
    for (int k = 1; k <= max_k; ++k) row.push_back(class_count(n, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<BigInt>> CountTable::tree_table(int max_n, int max_k) const {
  if (max_n < 1 || max_k < 1)
    throw std::invalid_argument("tree_table: bounds must be positive");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(max_k));
    for (int k = 1; k <= max_k; ++k) row.push_back(tree_count(n, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace godel
