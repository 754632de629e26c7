#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "godel/errors.hpp"
#include "godel/permutation.hpp"

namespace godel {

enum class NodeKind : std::uint8_t { Var, Bot, Top, And, Or, Implies, Neg };

/// Immutable propositional formula over variables X1, X2, ...
///
/// Connectives: conjunction, disjunction, implication, negation, plus the
/// constants falsum and verum. Negation is a primitive node; its semantics
/// is defined through implication into falsum, but the tree keeps it as
/// written so printing is faithful.
///
/// A Formula is a cheap handle to a shared immutable tree; copies share
/// structure and any Formula may be used from several threads at once.
class Formula {
public:
  struct Node {
    NodeKind kind;
    int var = 0;  // Var nodes only, 1-based
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  static Formula var(int index);  // throws std::invalid_argument if index < 1
  static Formula bot();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula neg(Formula a);

  NodeKind kind() const noexcept { return node_->kind; }
  int var_index() const;  // Var nodes only
  Formula left() const;   // And/Or/Implies
  Formula right() const;  // And/Or/Implies
  Formula child() const;  // Neg

  const Node* raw() const noexcept { return node_.get(); }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax:
///
///   formula := implies
///   implies := or [ "->" implies ]              (right associative)
///   or      := and { "|" and }
///   and     := neg { "&" neg }
///   neg     := ("~" | "!") neg | atom
///   atom    := var | "0" | "1" | "bot" | "top" | "(" formula ")"
///   var     := ("X" | "x") digits, value >= 1
///
/// Unicode aliases are accepted for every connective (→ ∧ ∨ ¬ ⊥ ⊤).
/// Whitespace between tokens is insignificant. Throws ParseError.
Formula parse(std::string_view text);

/// Minimal-parenthesis ASCII rendering; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Largest variable index occurring in f, 0 if none.
int max_var(const Formula& f);

/// Replaces every variable Xi by X_sigma(i). Requires max_var(f) <= sigma.n().
Formula rename(const Formula& f, const Permutation& sigma);

}  // namespace godel
