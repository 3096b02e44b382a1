#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ultra/rational.hpp"

namespace ultra::expr {

/// Parsed arithmetic expression over rational literals and named variables.
///
/// Grammar: sums and differences of products and quotients of powers; a power
/// is an atom optionally raised to an integer or a parenthesized rational
/// ("z^(1/3)", "t^2", "z^(-1)"). Variables are identifiers such as z, u, t, T,
/// T3, U.
struct Node {
  enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  Rational number;           // Number; exponent for Pow
  std::string name;          // Variable
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

using NodePtr = std::shared_ptr<const Node>;

NodePtr parse(std::string_view text);

/// Folds the tree bottom-up with a user supplied algebra. The algebra needs:
///   Value number(const Rational&), variable(const std::string&),
///   add, sub, mul, div(Value, Value), neg(Value), pow(Value, const Rational&).
template <typename Algebra>
auto evaluate(const Node& node, Algebra& alg) -> decltype(alg.number(node.number)) {
  switch (node.kind) {
    case Node::Kind::Number: return alg.number(node.number);
    case Node::Kind::Variable: return alg.variable(node.name);
    case Node::Kind::Add: return alg.add(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Node::Kind::Sub: return alg.sub(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Node::Kind::Mul: return alg.mul(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Node::Kind::Div: return alg.div(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Node::Kind::Neg: return alg.neg(evaluate(*node.lhs, alg));
    case Node::Kind::Pow: return alg.pow(evaluate(*node.lhs, alg), node.number);
  }
  return alg.number(Rational(0));
}

}  // namespace ultra::expr
