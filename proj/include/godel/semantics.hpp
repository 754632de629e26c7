#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "godel/formula.hpp"
#include "godel/numbers.hpp"

namespace godel {

/// A (top+1)-valued assignment to n variables. values[i-1] is the level of
/// Xi: 0 means falsum, top means verum, levels in between are the strictly
/// intermediate truth degrees in increasing order. Only the order of levels
/// matters to the connectives, so integer levels stand in for the rationals
/// i/top without loss.
struct LevelAssignment {
  int n;
  int top;
  std::vector<int> values;

  /// Throws std::invalid_argument unless top >= 1, values.size() == n and
  /// every value lies in [0, top].
  LevelAssignment(int n, int top, std::vector<int> values);
};

/// Formula flattened to a postfix program. Evaluation runs on an explicit
/// value stack, so arbitrarily deep formulas cannot exhaust the call stack,
/// and one compiled formula can be evaluated against many assignments
/// without touching the tree again.
class CompiledFormula {
public:
  explicit CompiledFormula(const Formula& f);

  int max_var() const noexcept { return max_var_; }

  /// Value of the formula at the given levels; values.size() must be at
  /// least max_var(). `stack` is scratch space reused across calls.
  int eval(std::span<const int> values, int top, std::vector<int>& stack) const;
  int eval(std::span<const int> values, int top) const;

private:
  enum class Op : std::uint8_t { PushVar, PushBot, PushTop, Min, Max, Imp, Neg };
  struct Ins {
    Op op;
    int arg;
  };
  std::vector<Ins> code_;
  std::size_t stack_need_ = 1;
  int max_var_ = 0;
};

/// The value of f under a: min for conjunction, max for disjunction,
/// residuated implication (top when left <= right, else the right value),
/// negation as implication into falsum. Requires max_var(f) <= a.n.
int eval(const Formula& f, const LevelAssignment& a);

/// True iff f evaluates to a.top under a.
bool is_true(const Formula& f, const LevelAssignment& a);

/// Number of Boolean assignments to X1..Xn (top = 1) making f true.
/// Requires max_var(f) <= n; n is capped at 30 (the count is exhaustive).
BigInt boolean_models(const Formula& f, int n);

}  // namespace godel
