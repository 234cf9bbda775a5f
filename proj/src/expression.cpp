// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/expression.hpp"

#include <cctype>
#include <sstream>

#include "ptlat/errors.hpp"

namespace ptlat {

struct Expression::Node {
  enum class Kind { Constant, Variable, Negate, Add, Subtract, Multiply, Divide, Sqrt };
  Kind kind;
  Real value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, Real value = 0) {
  return std::make_shared<const Node>(Node{kind, std::move(value), std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(current_char()) + "'");
    return root;
  }

  bool polynomial() const { return polynomial_; }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept("+")) {
        lhs = make(Node::Kind::Add, lhs, term());
      } else if (accept("-") || accept("−")) {
        lhs = make(Node::Kind::Subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept("*") || accept("×")) {
        lhs = make(Node::Kind::Multiply, lhs, unary());
      } else if (accept("/")) {
        polynomial_ = false;
        lhs = make(Node::Kind::Divide, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept("-") || accept("−")) return make(Node::Kind::Negate, unary());
    if (accept("+")) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept("(")) {
      NodePtr inner = expr();
      expect(")");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "t") return make(Node::Kind::Variable);
      if (word == "sqrt") {
        polynomial_ = false;
        expect("(");
        NodePtr inner = expr();
        expect(")");
        return make(Node::Kind::Sqrt, inner);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(current_char()) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = mark;
        fail("malformed exponent");
      }
    }
    return make(Node::Kind::Constant, nullptr, nullptr, Real(std::string(text_.substr(start, pos_ - start))));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) {
      if (pos_ >= text_.size()) fail("expected '" + std::string(token) + "' before end of expression");
      fail("expected '" + std::string(token) + "'");
    }
  }

  std::string_view current_char() const {
    std::size_t len = 1;
    while (pos_ + len < text_.size() && (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80) ++len;
    return text_.substr(pos_, len);
  }

  // Column in characters, counting UTF-8 continuation bytes as part of their lead byte.
  int column() const {
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++col;
    return col;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError("in expression '" + std::string(text_) + "': " + message, 1, column());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool polynomial_ = true;
};

Real eval(const Node& node, const Real& t, const std::string& text) {
  switch (node.kind) {
    case Node::Kind::Constant:
      return node.value;
    case Node::Kind::Variable:
      return t;
    case Node::Kind::Negate:
      return -eval(*node.lhs, t, text);
    case Node::Kind::Add:
      return eval(*node.lhs, t, text) + eval(*node.rhs, t, text);
    case Node::Kind::Subtract:
      return eval(*node.lhs, t, text) - eval(*node.rhs, t, text);
    case Node::Kind::Multiply:
      return eval(*node.lhs, t, text) * eval(*node.rhs, t, text);
    case Node::Kind::Divide: {
      const Real d = eval(*node.rhs, t, text);
      if (d == 0) {
        throw DomainError("division by zero in '" + text + "' at t=" + t.str(17));
      }
      return eval(*node.lhs, t, text) / d;
    }
    case Node::Kind::Sqrt: {
      const Real r = eval(*node.lhs, t, text);
      if (r < 0) {
        throw DomainError("negative radicand in '" + text + "' at t=" + t.str(17));
      }
      return sqrt(r);
    }
  }
  return 0;
}

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string text, bool polynomial)
    : root_(std::move(root)), text_(std::move(text)), polynomial_(polynomial) {}

Expression Expression::parse(std::string_view text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  return Expression(std::move(root), std::string(text), parser.polynomial());
}

Real Expression::evaluate(const Real& t) const { return eval(*root_, t, text_); }

}  // namespace ptlat
