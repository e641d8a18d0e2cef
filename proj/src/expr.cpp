#include "fprod/expr.hpp"

#include <cctype>
#include <climits>

#include "fprod/error.hpp"

namespace fprod::expr {

NodePtr number(Integer v) { return std::make_shared<Node>(Node{Number{std::move(v)}}); }
NodePtr atom(int index) { return std::make_shared<Node>(Node{Atom{index}}); }
NodePtr negate(NodePtr operand) { return std::make_shared<Node>(Node{Negate{std::move(operand)}}); }
NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
  return std::make_shared<Node>(Node{Binary{op, std::move(lhs), std::move(rhs)}});
}
NodePtr power(NodePtr base, unsigned exponent) { return std::make_shared<Node>(Node{Power{std::move(base), exponent}}); }

namespace {

enum class Tok { Number, Atom, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;  // digits for Number and Atom
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Number: return "number '" + t.text + "'";
    case Tok::Atom: return "'E" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
    return j;
  };
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t j = digits(i);
      out.push_back({Tok::Number, i, std::string(in.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == 'E') {
      const std::size_t j = digits(i + 1);
      if (j == i + 1) throw ParseError(i, "expected a weight after 'E'");
      out.push_back({Tok::Atom, i, std::string(in.substr(i + 1, j - i - 1))});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, in.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view input) : tokens_(lex(input)) {}

  NodePtr run() {
    NodePtr e = sum();
    if (peek().kind != Tok::End) throw ParseError(peek().offset, "unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  static NodePtr at(NodePtr n, std::size_t offset) {
    auto copy = std::make_shared<Node>(*n);
    copy->offset = offset;
    return copy;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const BinaryOp op = advance().kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = at(binary(op, lhs, product()), lhs->offset);
    }
    return lhs;
  }

  NodePtr product() {
    NodePtr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const BinaryOp op = advance().kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      NodePtr rhs = unary();
      if (op == BinaryOp::Div && !is_constant(*rhs)) throw ParseError(rhs->offset, "series division unsupported");
      lhs = at(binary(op, lhs, rhs), lhs->offset);
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus) {
      const std::size_t offset = advance().offset;
      return at(negate(unary()), offset);
    }
    return pow_expr();
  }

  NodePtr pow_expr() {
    NodePtr base = primary();
    while (peek().kind == Tok::Caret) {
      advance();
      const Token& t = peek();
      if (t.kind != Tok::Number) throw ParseError(t.offset, "expected a nonnegative integer exponent, found " + describe(t));
      advance();
      const Integer e{t.text};
      if (e > UINT_MAX) throw ParseError(t.offset, "exponent too large");
      base = at(power(base, static_cast<unsigned>(e.get_ui())), base->offset);
    }
    return base;
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        advance();
        return at(number(Integer{t.text}), t.offset);
      case Tok::Atom: {
        advance();
        const Integer k{t.text};
        if (k > kEisensteinLimit) throw ParseError(t.offset, "Eisenstein weight E" + t.text + " exceeds the supported limit");
        return at(atom(static_cast<int>(k.get_si())), t.offset);
      }
      case Tok::LParen: {
        advance();
        NodePtr inner = sum();
        if (peek().kind != Tok::RParen) throw ParseError(peek().offset, "expected ')' but found " + describe(peek()));
        advance();
        return at(inner, t.offset);
      }
      default:
        throw ParseError(t.offset, "expected a number, atom or '(' but found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer.
int precedence(const Node& e) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Binary>) return (v.op == BinaryOp::Add || v.op == BinaryOp::Sub) ? 1 : 2;
        else if constexpr (std::is_same_v<T, Negate>) return 3;
        else if constexpr (std::is_same_v<T, Power>) return 4;
        else return 5;
      },
      e.value);
}

std::string wrap(const Node& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

NodePtr parse(std::string_view input) { return Parser(input).run(); }

std::string print(const Node& e) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Number>) {
          return v.value.get_str();
        } else if constexpr (std::is_same_v<T, Atom>) {
          return "E" + std::to_string(v.index);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + wrap(*v.operand, 3);
        } else if constexpr (std::is_same_v<T, Power>) {
          return wrap(*v.base, 4) + "^" + std::to_string(v.exponent);
        } else {
          static constexpr const char* kOps[] = {" + ", " - ", "*", "/"};
          const int p = (v.op == BinaryOp::Add || v.op == BinaryOp::Sub) ? 1 : 2;
          return wrap(*v.lhs, p) + kOps[static_cast<int>(v.op)] + wrap(*v.rhs, p + 1);
        }
      },
      e.value);
}

bool equal(const Node& a, const Node& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, Number>) return x.value == y.value;
        else if constexpr (std::is_same_v<T, Atom>) return x.index == y.index;
        else if constexpr (std::is_same_v<T, Negate>) return equal(*x.operand, *y.operand);
        else if constexpr (std::is_same_v<T, Power>) return x.exponent == y.exponent && equal(*x.base, *y.base);
        else return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
      },
      a.value);
}

bool is_constant(const Node& e) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Number>) return true;
        else if constexpr (std::is_same_v<T, Atom>) return false;
        else if constexpr (std::is_same_v<T, Negate>) return is_constant(*v.operand);
        else if constexpr (std::is_same_v<T, Power>) return is_constant(*v.base);
        else return is_constant(*v.lhs) && is_constant(*v.rhs);
      },
      e.value);
}

namespace {

InhomogeneousForm atom_form(int k, std::size_t offset) {
  if (k == 1) return InhomogeneousForm::monomial({1, 0});
  if (k == 3) return InhomogeneousForm::monomial({0, 1});
  const std::string where = " (at offset " + std::to_string(offset) + ")";
  if (k == 2) throw UsageError("E2 is not a modular form; write E1^2 for weight 2" + where);
  if (k == 0 || k % 2 != 0) throw UsageError("no Eisenstein atom E" + std::to_string(k) + where);
  return InhomogeneousForm::from_component(eisenstein_coords(k));
}

}  // namespace

InhomogeneousForm evaluate(const Node& e, std::size_t prec) {
  if (prec == 0) throw UsageError("precision must be positive");
  return std::visit(
      [&](const auto& v) -> InhomogeneousForm {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Number>) {
          return InhomogeneousForm::constant(Rational(v.value));
        } else if constexpr (std::is_same_v<T, Atom>) {
          return atom_form(v.index, e.offset);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -evaluate(*v.operand, prec);
        } else if constexpr (std::is_same_v<T, Power>) {
          const InhomogeneousForm base = evaluate(*v.base, prec);
          if (auto w = base.max_weight(); w && *w > 0 && static_cast<long long>(*w) * v.exponent > kWeightLimit)
            throw UsageError("power exceeds the supported weight limit");
          return pow(base, v.exponent);
        } else {
          InhomogeneousForm lhs = evaluate(*v.lhs, prec);
          InhomogeneousForm rhs = evaluate(*v.rhs, prec);
          switch (v.op) {
            case BinaryOp::Add: return lhs + rhs;
            case BinaryOp::Sub: return lhs - rhs;
            case BinaryOp::Mul: return lhs * rhs;
            case BinaryOp::Div: {
              if (auto w = rhs.max_weight(); w && *w > 0)
                throw UsageError("series division unsupported (at offset " + std::to_string(v.rhs->offset) + ")");
              const Rational c = rhs.is_zero() ? Rational(0) : rhs.component(0).coords[0];
              if (c == 0) throw UsageError("division by zero (at offset " + std::to_string(v.rhs->offset) + ")");
              return lhs * Rational(1 / c);
            }
          }
          return lhs;
        }
      },
      e.value);
}

InhomogeneousForm evaluate(std::string_view input, std::size_t prec) { return evaluate(*parse(input), prec); }

}  // namespace fprod::expr
