#include "godel/semantics.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace godel {

LevelAssignment::LevelAssignment(int n_, int top_, std::vector<int> values_)
    : n(n_), top(top_), values(std::move(values_)) {
  if (n < 0) throw std::invalid_argument("assignment: n must be >= 0");
  if (top < 1) throw std::invalid_argument("assignment: top must be >= 1");
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("assignment: expected one value per variable");
  for (int v : values)
    if (v < 0 || v > top) throw std::invalid_argument("assignment: value outside [0, top]");
}

CompiledFormula::CompiledFormula(const Formula& f) {
  // Iterative postorder emit.
  std::vector<std::pair<const Formula::Node*, bool>> work{{f.raw(), false}};
  while (!work.empty()) {
    auto [node, emit] = work.back();
    work.pop_back();
    if (!emit) {
      work.emplace_back(node, true);
      if (node->right) work.emplace_back(node->right.get(), false);
      if (node->left) work.emplace_back(node->left.get(), false);
      continue;
    }
    switch (node->kind) {
      case NodeKind::Var:
        code_.push_back({Op::PushVar, node->var - 1});
        max_var_ = std::max(max_var_, node->var);
        break;
      case NodeKind::Bot: code_.push_back({Op::PushBot, 0}); break;
      case NodeKind::Top: code_.push_back({Op::PushTop, 0}); break;
      case NodeKind::And: code_.push_back({Op::Min, 0}); break;
      case NodeKind::Or: code_.push_back({Op::Max, 0}); break;
      case NodeKind::Implies: code_.push_back({Op::Imp, 0}); break;
      case NodeKind::Neg: code_.push_back({Op::Neg, 0}); break;
    }
  }
  std::size_t depth = 0;
  for (const Ins& ins : code_) {
    switch (ins.op) {
      case Op::PushVar:
      case Op::PushBot:
      case Op::PushTop:
        ++depth;
        stack_need_ = std::max(stack_need_, depth);
        break;
      case Op::Min:
      case Op::Max:
      case Op::Imp: --depth; break;
      case Op::Neg: break;
    }
  }
}

int CompiledFormula::eval(std::span<const int> values, int top, std::vector<int>& stack) const {
  stack.resize(stack_need_);
  int* sp = stack.data();
  for (const Ins& ins : code_) {
    switch (ins.op) {
      case Op::PushVar: *sp++ = values[static_cast<std::size_t>(ins.arg)]; break;
      case Op::PushBot: *sp++ = 0; break;
      case Op::PushTop: *sp++ = top; break;
      case Op::Min: {
        const int b = *--sp;
        sp[-1] = std::min(sp[-1], b);
        break;
      }
      case Op::Max: {
        const int b = *--sp;
        sp[-1] = std::max(sp[-1], b);
        break;
      }
      case Op::Imp: {
        const int b = *--sp;
        sp[-1] = sp[-1] <= b ? top : b;
        break;
      }
      case Op::Neg: sp[-1] = sp[-1] == 0 ? top : 0; break;
    }
  }
  return sp[-1];
}

int CompiledFormula::eval(std::span<const int> values, int top) const {
  std::vector<int> stack;
  return eval(values, top, stack);
}

int eval(const Formula& f, const LevelAssignment& a) {
  CompiledFormula cf(f);
  if (cf.max_var() > a.n)
    throw std::invalid_argument("eval: formula references a variable beyond the assignment");
  return cf.eval(a.values, a.top);
}

bool is_true(const Formula& f, const LevelAssignment& a) { return eval(f, a) == a.top; }

BigInt boolean_models(const Formula& f, int n) {
  CompiledFormula cf(f);
  if (n < cf.max_var())
    throw std::invalid_argument("boolean_models: n smaller than the largest variable index");
  if (n > 30) throw GuardExceeded("boolean_models: n > 30 would enumerate over 2^30 assignments");
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? 1 : 0;
    if (cf.eval(values, 1, stack) == 1) ++count;
  }
  return BigInt(count);
}

}  // namespace godel
