#include "ultra/expr.hpp"

#include <cctype>

#include "ultra/error.hpp"

namespace ultra::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr n = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make(Node::Kind kind, NodePtr lhs, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (accept('+')) lhs = make(Node::Kind::Add, lhs, parse_product());
      else if (accept('-')) lhs = make(Node::Kind::Sub, lhs, parse_product());
      else return lhs;
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) lhs = make(Node::Kind::Mul, lhs, parse_unary());
      else if (accept('/')) lhs = make(Node::Kind::Div, lhs, parse_unary());
      else return lhs;
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make(Node::Kind::Neg, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (!accept('^')) return base;
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Pow;
    n->lhs = base;
    n->number = parse_exponent();
    return n;
  }

  Rational parse_exponent() {
    skip_ws();
    if (accept('(')) {
      bool negative = accept('-');
      Integer num = parse_integer();
      Integer den = 1;
      if (accept('/')) den = parse_integer();
      if (!accept(')')) fail("expected ')' after exponent");
      if (den == 0) fail("zero denominator in exponent");
      Rational q(negative ? Integer(-num) : num, den);
      q.canonicalize();
      return q;
    }
    bool negative = accept('-');
    Integer n = parse_integer();
    return Rational(negative ? Integer(-n) : n);
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Number;
      n->number = Rational(parse_integer());
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      n->name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace ultra::expr
