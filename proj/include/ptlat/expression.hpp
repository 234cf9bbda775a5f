// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

// Entry expressions for user-defined lattices.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | primary
//   primary := number | 't' | 'sqrt' '(' expr ')' | '(' expr ')'
//
// The Unicode minus and multiplication signs are accepted as well.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ptlat/matrix.hpp"

namespace ptlat {

class Expression {
 public:
  /// Throws ParseError with line 1 and a 1-based column (in characters).
  static Expression parse(std::string_view text);

  /// Throws DomainError on a negative radicand or division by zero.
  Real evaluate(const Real& t) const;
  double evaluate(double t) const { return to_double(evaluate(Real(t))); }

  const std::string& text() const { return text_; }
  /// No sqrt and no division: defined for every real t.
  bool is_polynomial() const { return polynomial_; }

  struct Node;

 private:
  Expression(std::shared_ptr<const Node> root, std::string text, bool polynomial);

  std::shared_ptr<const Node> root_;
  std::string text_;
  bool polynomial_ = true;
};

}  // namespace ptlat
