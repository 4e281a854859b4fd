// Copyright (c) 2026 The mulsemi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * @brief Expression language for the diagonal entries of a symbol.
 *
 * Grammar (whitespace between tokens is ignored, ASCII only):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := '-' unary | power
 *     power   := primary ('^' INTEGER)*
 *     primary := NUMBER | 'i' | 'x' | FUNC '(' expr ')' | '(' expr ')'
 *     FUNC    := exp | sin | cos | log | abs
 *
 * NUMBER is an unsigned integer or decimal literal; exponents of '^' are nonnegative integer
 * literals. Binary operators associate to the left.
 */

#include "mulsemi/lattice.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mulsemi {

  /// Immutable expression tree. Copies share their subtrees.
  class Expr {
    public:
    enum class Kind { number, imag_unit, variable, negate, add, sub, mul, div, pow, call };
    enum class Func { exp, sin, cos, log, abs };

    static Expr number(double value);
    static Expr imag_unit();
    static Expr variable();
    static Expr negate(Expr operand);
    static Expr binary(Kind op, Expr lhs, Expr rhs);
    static Expr power(Expr base, std::uint32_t exponent);
    static Expr call(Func f, Expr argument);

    [[nodiscard]] Kind kind() const noexcept;
    /// Literal value (number nodes only).
    [[nodiscard]] double value() const noexcept;
    /// Integer exponent (pow nodes only).
    [[nodiscard]] std::uint32_t exponent() const noexcept;
    [[nodiscard]] Func func() const noexcept;
    /// Operand of negate/pow/call, left operand of binary nodes.
    [[nodiscard]] Expr const &lhs() const;
    [[nodiscard]] Expr const &rhs() const;

    /// True if the variable x occurs anywhere in the tree.
    [[nodiscard]] bool uses_variable() const;

    /// Structural equality; literals compare by exact value.
    friend bool operator==(Expr const &a, Expr const &b);

    private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
  };

  struct Expr::Node {
    Kind kind = Kind::number;
    double value = 0.0;
    std::uint32_t exponent = 0;
    Func func = Func::exp;
    std::vector<Expr> children;
  };

  inline Expr::Kind Expr::kind() const noexcept { return node_->kind; }
  inline double Expr::value() const noexcept { return node_->value; }
  inline std::uint32_t Expr::exponent() const noexcept { return node_->exponent; }
  inline Expr::Func Expr::func() const noexcept { return node_->func; }
  inline Expr const &Expr::lhs() const { return node_->children[0]; }
  inline Expr const &Expr::rhs() const { return node_->children[1]; }

  /// Parses expression text. Throws SyntaxError carrying the byte offset of the offending token.
  [[nodiscard]] Expr parse(std::string_view text);

  /// Canonical text with minimal parentheses; parse(to_string(e)) == e.
  [[nodiscard]] std::string to_string(Expr const &e);

  /// Evaluates at x with principal-branch complex functions. Throws DivisionByZero, LogOfZero.
  [[nodiscard]] Complex eval(Expr const &e, Complex x);

  [[nodiscard]] std::string_view func_name(Expr::Func f) noexcept;

} // namespace mulsemi
