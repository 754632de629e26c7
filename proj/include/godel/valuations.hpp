#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "godel/numbers.hpp"
#include "godel/patterns.hpp"

namespace godel {

/// Dense valuation work indexes every pattern of height <= n+1; this cap
/// admits n <= 6 (18731 patterns) by default.
inline constexpr std::size_t kDenseValuationGuard = 20000;

/// A valuation on the Lindenbaum algebra over X1..Xn, stored by its weights
/// on the join-irreducibles: nu(x) = sum of weights over the irreducibles
/// below x, which makes nu(f or g) + nu(f and g) = nu(f) + nu(g) automatic
/// and nu(bottom) = 0 implicit. Missing patterns weigh 0.
class Valuation {
public:
  explicit Valuation(int n);

  int vars() const noexcept { return n_; }

  Rational weight(const OrderPattern& p) const;
  void set_weight(const OrderPattern& p, Rational w);  // w = 0 erases
  const std::unordered_map<OrderPattern, Rational, OrderPatternHash>& weights() const noexcept {
    return weights_;
  }

  /// Weight 1 at p alone: the basis valuation of that join-irreducible.
  static Valuation indicator(const OrderPattern& p);

  Valuation& operator+=(const Valuation& other);
  Valuation& operator-=(const Valuation& other);
  Valuation& operator*=(const Rational& scalar);
  friend Valuation operator+(Valuation a, const Valuation& b) { return a += b; }
  friend Valuation operator-(Valuation a, const Valuation& b) { return a -= b; }
  friend Valuation operator*(Valuation a, const Rational& s) { return a *= s; }
  friend Valuation operator*(const Rational& s, Valuation a) { return a *= s; }

private:
  int n_;
  std::unordered_map<OrderPattern, Rational, OrderPatternHash> weights_;
};

/// chi_k as a valuation: weight 1 on every pattern of height <= k, 0 above.
/// Requires 1 <= k <= n+1; materializes the pattern universe (guarded).
Valuation chi_as_valuation(int n, int k, std::size_t max_patterns = kDenseValuationGuard);

/// nu at the join-irreducible p: the weights summed along p's ancestor
/// chain (the lower set of a join-irreducible is a chain). For chi_k this
/// is min(height(p), k).
Rational value_at_pattern(const Valuation& nu, const OrderPattern& p);

/// nu at [f]: the weights summed over the patterns satisfying f. For
/// nu = chi_as_valuation(n,k) this equals chi(f,n,k).
Rational value_at_formula(const Valuation& nu, const Formula& f);

/// A maximal chain c_1 < ... < c_{n+1} in the forest: height(c_i) = i and
/// parent(c_{i+1}) = c_i. Witnesses the independence of chi_1..chi_{n+1}.
std::vector<OrderPattern> maximal_chain(int n);

struct LinearSystem {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
};

/// M[i][k] = value of chi_{k+1} at c_{i+1} (0-based), i.e. min(i+1,k+1),
/// computed by walking the ancestor chains. rhs is zero.
LinearSystem independence_matrix(int n);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(const LinearSystem& sys);

/// Number of orbits of the height <= n+1 patterns under variable
/// permutations = dimension of the permutation-invariant subspace.
std::uint64_t invariant_dimension(int n, std::size_t max_patterns = kDenseValuationGuard);

/// Weights constant along every adjacent-transposition edge, hence on every
/// S_n orbit.
bool is_invariant(const Valuation& nu);

/// Coefficients r with nu = sum_k r_k chi_k (k = 1..n+1) if nu lies in the
/// span of the generalised characteristics; empty otherwise. nu is in the
/// span exactly when its weights are constant per height, and then
/// r_k = s_k - s_{k+1} where s_h is the common weight at height h.
std::optional<std::vector<Rational>> in_span_of_chis(const Valuation& nu,
                                                     std::size_t max_patterns = kDenseValuationGuard);

/// Dimensions of the three nested spaces over n variables: the span of the
/// characteristics (n+1), the permutation-invariant valuations (orbit
/// count), and all valuations (P(n,n+1)).
struct SpaceDims {
  int c = 0;
  std::uint64_t i_perm = 0;
  BigInt v;
};

SpaceDims space_dims(int n, std::size_t max_patterns = kDenseValuationGuard);

}  // namespace godel
