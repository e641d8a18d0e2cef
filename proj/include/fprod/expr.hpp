#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "fprod/divcong.hpp"

namespace fprod::expr {

// Grammar (whitespace between tokens is ignored):
//
//   sum     = product { ("+" | "-") product }
//   product = unary { ("*" | "/") unary }
//   unary   = "-" unary | power
//   power   = primary { "^" integer }
//   primary = integer | atom | "(" sum ")"
//   atom    = "E" integer
//   integer = digit { digit }
//
// Divisors must not contain atoms.

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  Integer value;  // nonnegative
};
struct Atom {
  int index;  // E<index>
};
struct Negate {
  NodePtr operand;
};
enum class BinaryOp { Add, Sub, Mul, Div };
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};

struct Node {
  std::variant<Number, Atom, Negate, Binary, Power> value;
  std::size_t offset = 0;  // byte offset of the node's first token
};

NodePtr number(Integer v);
NodePtr atom(int index);
NodePtr negate(NodePtr operand);
NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
NodePtr power(NodePtr base, unsigned exponent);

// Throws ParseError with a byte offset.
NodePtr parse(std::string_view input);

// Minimal-parenthesis rendering; parse(print(e)) is structurally equal to e.
std::string print(const Node& e);

// Structural equality, ignoring offsets.
bool equal(const Node& a, const Node& b);

bool is_constant(const Node& e);

// Evaluates to an exact polynomial in E1, E3. E_k (k even >= 4) is converted
// to level-3 coordinates. Throws UsageError for E2, odd k other than 1 and 3,
// and division by zero.
InhomogeneousForm evaluate(const Node& e, std::size_t prec);
InhomogeneousForm evaluate(std::string_view input, std::size_t prec);

}  // namespace fprod::expr
