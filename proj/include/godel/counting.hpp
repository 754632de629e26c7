#pragma once

#include <mutex>
#include <vector>

#include "godel/numbers.hpp"

namespace godel {

/// Memoized binomials and the two counting sequences:
///   T(n,k) — join-irreducibles of height exactly k in the maximal tree,
///            T(n,1)=1, T(n,k)=0 for k>n+1,
///            T(n,k)=sum_{i=1..n} C(n,i)*T(n-i,k-1) otherwise;
///   P(n,k) — join-irreducibles of height <= k in the whole forest,
///            P(n,k)=sum_{i=1..k} sum_{j=0..n} C(n,j)*T(j,i),
/// with P(n,k)=P(n,n+1) for every k >= n+1 (the table stabilizes).
///
/// All values arbitrary precision. Thread-safe: the memo is filled under a
/// mutex, so concurrent readers are fine.
class CountTable {
public:
  BigInt binomial(int n, int k) const;
  BigInt tree_count(int n, int k) const;   // T(n,k); n >= 0, k >= 1
  BigInt class_count(int n, int k) const;  // P(n,k); n >= 1, k >= 1, clamped

  BigInt T(int n, int k) const { return tree_count(n, k); }
  BigInt P(int n, int k) const { return class_count(n, k); }

  /// P(n,k) for n = 1..max_n, k = 1..max_k (row-major, clamped entries).
  std::vector<std::vector<BigInt>> class_table(int max_n, int max_k) const;
  /// T(n,k) on the same grid (entries beyond k = n+1 are zero).
  std::vector<std::vector<BigInt>> tree_table(int max_n, int max_k) const;

private:
  void ensure_binomials(int n) const;
  void ensure_trees(int n) const;
  void ensure_classes(int n, int k) const;

  mutable std::mutex mutex_;
  mutable std::vector<std::vector<BigInt>> pascal_;   // pascal_[n][k] = C(n,k)
  mutable std::vector<std::vector<BigInt>> trees_;    // trees_[n][k-1] = T(n,k), k = 1..n+1
  mutable std::vector<std::vector<BigInt>> classes_;  // classes_[n][k-1] = P(n+1,k)
};

}  // namespace godel
