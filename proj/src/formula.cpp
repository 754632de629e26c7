#include "godel/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace godel {

namespace {

std::shared_ptr<const Formula::Node> make_node(NodeKind kind, int var,
                                               std::shared_ptr<const Formula::Node> left,
                                               std::shared_ptr<const Formula::Node> right) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->var = var;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

// Shared singletons for the constants.
const std::shared_ptr<const Formula::Node>& bot_node() {
  static const auto node = make_node(NodeKind::Bot, 0, nullptr, nullptr);
  return node;
}

const std::shared_ptr<const Formula::Node>& top_node() {
  static const auto node = make_node(NodeKind::Top, 0, nullptr, nullptr);
  return node;
}

}  // namespace

Formula Formula::var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  return Formula(make_node(NodeKind::Var, index, nullptr, nullptr));
}

Formula Formula::bot() { return Formula(bot_node()); }
Formula Formula::top() { return Formula(top_node()); }

Formula Formula::conj(Formula a, Formula b) {
  return Formula(make_node(NodeKind::And, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(make_node(NodeKind::Or, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(make_node(NodeKind::Implies, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::neg(Formula a) {
  return Formula(make_node(NodeKind::Neg, 0, std::move(a.node_), nullptr));
}

int Formula::var_index() const {
  if (node_->kind != NodeKind::Var) throw std::logic_error("var_index on non-variable node");
  return node_->var;
}

Formula Formula::left() const {
  if (!node_->left || !node_->right) throw std::logic_error("left on non-binary node");
  return Formula(node_->left);
}

Formula Formula::right() const {
  if (!node_->right) throw std::logic_error("right on non-binary node");
  return Formula(node_->right);
}

Formula Formula::child() const {
  if (node_->kind != NodeKind::Neg) throw std::logic_error("child on non-negation node");
  return Formula(node_->left);
}

bool operator==(const Formula& a, const Formula& b) {
  std::vector<std::pair<const Formula::Node*, const Formula::Node*>> work;
  work.emplace_back(a.node_.get(), b.node_.get());
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;  // shared subtree
    if (x->kind != y->kind || x->var != y->var) return false;
    if (!x->left != !y->left || !x->right != !y->right) return false;
    if (x->left) work.emplace_back(x->left.get(), y->left.get());
    if (x->right) work.emplace_back(x->right.get(), y->right.get());
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t { Var, Bot, Top, And, Or, Implies, Not, LParen, RParen, End };

struct Token {
  Tok kind;
  int var = 0;
  std::size_t pos = 0;  // 1-based byte offset
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    const std::size_t pos = i_ + 1;
    if (i_ >= text_.size()) return {Tok::End, 0, pos};
    const char c = text_[i_];
    switch (c) {
      case '(': ++i_; return {Tok::LParen, 0, pos};
      case ')': ++i_; return {Tok::RParen, 0, pos};
      case '&': ++i_; return {Tok::And, 0, pos};
      case '|': ++i_; return {Tok::Or, 0, pos};
      case '~':
      case '!': ++i_; return {Tok::Not, 0, pos};
      case '0': ++i_; return {Tok::Bot, 0, pos};
      case '1': ++i_; return {Tok::Top, 0, pos};
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
          i_ += 2;
          return {Tok::Implies, 0, pos};
        }
        throw ParseError("expected '->'", pos);
      case 'X':
      case 'x': return lex_var(pos);
      default: break;
    }
    if (starts_with("→")) return consume(3, Tok::Implies, pos);  // →
    if (starts_with("∧")) return consume(3, Tok::And, pos);      // ∧
    if (starts_with("∨")) return consume(3, Tok::Or, pos);       // ∨
    if (starts_with("¬")) return consume(2, Tok::Not, pos);      // ¬
    if (starts_with("⊥")) return consume(3, Tok::Bot, pos);      // ⊥
    if (starts_with("⊤")) return consume(3, Tok::Top, pos);      // ⊤
    if (starts_with("bot")) return consume(3, Tok::Bot, pos);
    if (starts_with("top")) return consume(3, Tok::Top, pos);
    throw ParseError("unexpected character", pos);
  }

private:
  void skip_ws() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r'))
      ++i_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(i_).starts_with(s); }

  Token consume(std::size_t len, Tok kind, std::size_t pos) {
    i_ += len;
    return {kind, 0, pos};
  }

  Token lex_var(std::size_t pos) {
    ++i_;  // the 'X'
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
      throw ParseError("expected variable index after 'X'", pos);
    long value = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      value = value * 10 + (text_[i_] - '0');
      if (value > 1'000'000) throw ParseError("variable index too large", pos);
      ++i_;
    }
    if (value < 1) throw ParseError("variable index must be >= 1", pos);
    return {Tok::Var, static_cast<int>(value), pos};
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula run() {
    Formula f = parse_implies();
    if (cur_.kind != Tok::End) throw ParseError("trailing input", cur_.pos);
    return f;
  }

private:
  void advance() { cur_ = lexer_.next(); }

  bool accept(Tok kind) {
    if (cur_.kind != kind) return false;
    advance();
    return true;
  }

  Formula parse_implies() {
    // Right associative: collect the chain, then fold from the right.
    std::vector<Formula> operands;
    operands.push_back(parse_or());
    while (accept(Tok::Implies)) operands.push_back(parse_or());
    Formula f = operands.back();
    for (std::size_t i = operands.size() - 1; i-- > 0;) f = Formula::implies(operands[i], f);
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_neg();
    while (accept(Tok::And)) f = Formula::conj(f, parse_neg());
    return f;
  }

  Formula parse_neg() {
    std::size_t negs = 0;
    while (accept(Tok::Not)) ++negs;
    Formula f = parse_atom();
    for (; negs > 0; --negs) f = Formula::neg(f);
    return f;
  }

  Formula parse_atom() {
    const Token tok = cur_;
    switch (tok.kind) {
      case Tok::Var: advance(); return Formula::var(tok.var);
      case Tok::Bot: advance(); return Formula::bot();
      case Tok::Top: advance(); return Formula::top();
      case Tok::LParen: {
        advance();
        Formula f = parse_implies();
        if (!accept(Tok::RParen)) throw ParseError("expected ')'", cur_.pos);
        return f;
      }
      default: throw ParseError("expected formula", tok.pos);
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, 0};
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

int precedence(NodeKind kind) {
  switch (kind) {
    case NodeKind::Implies: return 1;
    case NodeKind::Or: return 2;
    case NodeKind::And: return 3;
    case NodeKind::Neg: return 4;
    default: return 5;  // atoms
  }
}

// `required` is the minimum precedence renderable without parentheses.
void render(const Formula::Node* node, int required, std::string& out) {
  const int prec = precedence(node->kind);
  const bool parens = prec < required;
  if (parens) out += '(';
  switch (node->kind) {
    case NodeKind::Var:
      out += 'X';
      out += std::to_string(node->var);
      break;
    case NodeKind::Bot: out += '0'; break;
    case NodeKind::Top: out += '1'; break;
    case NodeKind::Neg:
      out += '~';
      render(node->left.get(), prec, out);
      break;
    case NodeKind::And:
    case NodeKind::Or:
      // Left associative: an equal-precedence right child needs parentheses.
      render(node->left.get(), prec, out);
      out += node->kind == NodeKind::And ? " & " : " | ";
      render(node->right.get(), prec + 1, out);
      break;
    case NodeKind::Implies:
      render(node->left.get(), prec + 1, out);
      out += " -> ";
      render(node->right.get(), prec, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(f.raw(), 0, out);
  return out;
}

int max_var(const Formula& f) {
  int best = 0;
  std::vector<const Formula::Node*> work{f.raw()};
  while (!work.empty()) {
    const Formula::Node* node = work.back();
    work.pop_back();
    if (node->kind == NodeKind::Var) best = std::max(best, node->var);
    if (node->left) work.push_back(node->left.get());
    if (node->right) work.push_back(node->right.get());
  }
  return best;
}

Formula rename(const Formula& f, const Permutation& sigma) {
  if (max_var(f) > sigma.n())
    throw std::invalid_argument("rename: formula uses variables beyond the permutation's range");

  // Iterative postorder rebuild; `done` marks nodes whose children are ready
  // on the result stack.
  std::vector<std::pair<const Formula::Node*, bool>> work{{f.raw(), false}};
  std::vector<Formula> results;
  while (!work.empty()) {
    auto [node, done] = work.back();
    work.pop_back();
    if (!done) {
      work.emplace_back(node, true);
      if (node->right) work.emplace_back(node->right.get(), false);
      if (node->left) work.emplace_back(node->left.get(), false);
      continue;
    }
    switch (node->kind) {
      case NodeKind::Var: results.push_back(Formula::var(sigma.apply(node->var))); break;
      case NodeKind::Bot: results.push_back(Formula::bot()); break;
      case NodeKind::Top: results.push_back(Formula::top()); break;
      case NodeKind::Neg: {
        Formula child = results.back();
        results.pop_back();
        results.push_back(Formula::neg(child));
        break;
      }
      default: {
        Formula right = results.back();
        results.pop_back();
        Formula left = results.back();
        results.pop_back();
        switch (node->kind) {
          case NodeKind::And: results.push_back(Formula::conj(left, right)); break;
          case NodeKind::Or: results.push_back(Formula::disj(left, right)); break;
          default: results.push_back(Formula::implies(left, right)); break;
        }
        break;
      }
    }
  }
  return results.back();
}

}  // namespace godel
