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

#include "mulsemi/expr.hpp"

#include "mulsemi/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>

namespace mulsemi {

  namespace {

    constexpr std::array<std::pair<std::string_view, Expr::Func>, 5> functions{{
       {"exp", Expr::Func::exp},
       {"sin", Expr::Func::sin},
       {"cos", Expr::Func::cos},
       {"log", Expr::Func::log},
       {"abs", Expr::Func::abs},
    }};

    bool is_binary(Expr::Kind k) {
      return k == Expr::Kind::add || k == Expr::Kind::sub || k == Expr::Kind::mul || k == Expr::Kind::div;
    }

  } // namespace

  Expr Expr::number(double value) {
    if (!std::isfinite(value) || value < 0.0 || std::signbit(value))
      throw std::invalid_argument("expression literals are finite and nonnegative");
    auto n = std::make_shared<Node>();
    n->kind = Kind::number;
    n->value = value;
    return Expr(std::move(n));
  }

  Expr Expr::imag_unit() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::imag_unit;
    return Expr(std::move(n));
  }

  Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    return Expr(std::move(n));
  }

  Expr Expr::negate(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::negate;
    n->children.push_back(std::move(operand));
    return Expr(std::move(n));
  }

  Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
    if (!is_binary(op)) throw std::invalid_argument("Expr::binary needs one of add, sub, mul, div");
    auto n = std::make_shared<Node>();
    n->kind = op;
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return Expr(std::move(n));
  }

  Expr Expr::power(Expr base, std::uint32_t exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::pow;
    n->exponent = exponent;
    n->children.push_back(std::move(base));
    return Expr(std::move(n));
  }

  Expr Expr::call(Func f, Expr argument) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::call;
    n->func = f;
    n->children.push_back(std::move(argument));
    return Expr(std::move(n));
  }

  bool Expr::uses_variable() const {
    if (kind() == Kind::variable) return true;
    for (auto const &c : node_->children)
      if (c.uses_variable()) return true;
    return false;
  }

  bool operator==(Expr const &a, Expr const &b) {
    if (a.node_ == b.node_) return true;
    auto const &x = *a.node_;
    auto const &y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case Expr::Kind::number: return x.value == y.value;
      case Expr::Kind::pow:
        if (x.exponent != y.exponent) return false;
        break;
      case Expr::Kind::call:
        if (x.func != y.func) return false;
        break;
      default: break;
    }
    return x.children == y.children;
  }

  std::string_view func_name(Expr::Func f) noexcept {
    for (auto const &[name, func] : functions)
      if (func == f) return name;
    return "?";
  }

  // ---------------------------------------------------------------------------
  // Lexer and recursive-descent parser

  namespace {

    struct Token {
      enum class Type { number, ident, op, end } type = Type::end;
      std::size_t pos = 0;
      std::string_view text;
      double value = 0.0;
      bool integral = false;
    };

    class Parser {
      public:
      explicit Parser(std::string_view text) : text_(text) { advance(); }

      Expr parse_all() {
        Expr e = parse_expr();
        if (tok_.type != Token::Type::end) fail(tok_.text == ")" ? "unmatched ')'" : "expected end of input");
        return e;
      }

      private:
      [[noreturn]] void fail(std::string const &msg) const { throw SyntaxError(msg, tok_.pos); }

      bool is_op(char c) const { return tok_.type == Token::Type::op && tok_.text[0] == c; }

      void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) ++pos_;
        tok_ = Token{};
        tok_.pos = pos_;
        if (pos_ == text_.size()) return;

        char const c = text_[pos_];
        auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
        auto is_alpha = [](char ch) { return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_'; };

        if (is_digit(c)) {
          std::size_t end = pos_;
          while (end < text_.size() && is_digit(text_[end])) ++end;
          tok_.integral = true;
          if (end < text_.size() && text_[end] == '.') {
            if (end + 1 >= text_.size() || !is_digit(text_[end + 1])) throw SyntaxError("malformed number", end);
            ++end;
            while (end < text_.size() && is_digit(text_[end])) ++end;
            tok_.integral = false;
          }
          tok_.type = Token::Type::number;
          tok_.text = text_.substr(pos_, end - pos_);
          auto [ptr, ec] = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), tok_.value);
          if (ec != std::errc{} || !std::isfinite(tok_.value)) throw SyntaxError("number out of range", pos_);
          pos_ = end;
        } else if (is_alpha(c)) {
          std::size_t end = pos_;
          while (end < text_.size() && (is_alpha(text_[end]) || is_digit(text_[end]))) ++end;
          tok_.type = Token::Type::ident;
          tok_.text = text_.substr(pos_, end - pos_);
          pos_ = end;
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' || c == ')') {
          tok_.type = Token::Type::op;
          tok_.text = text_.substr(pos_, 1);
          ++pos_;
        } else {
          throw SyntaxError("invalid character", pos_);
        }
      }

      Expr parse_expr() {
        Expr lhs = parse_term();
        while (is_op('+') || is_op('-')) {
          auto const op = is_op('+') ? Expr::Kind::add : Expr::Kind::sub;
          advance();
          lhs = Expr::binary(op, std::move(lhs), parse_term());
        }
        return lhs;
      }

      Expr parse_term() {
        Expr lhs = parse_unary();
        while (is_op('*') || is_op('/')) {
          auto const op = is_op('*') ? Expr::Kind::mul : Expr::Kind::div;
          advance();
          lhs = Expr::binary(op, std::move(lhs), parse_unary());
        }
        return lhs;
      }

      Expr parse_unary() {
        if (is_op('-')) {
          advance();
          return Expr::negate(parse_unary());
        }
        return parse_power();
      }

      Expr parse_power() {
        Expr base = parse_primary();
        while (is_op('^')) {
          advance();
          if (tok_.type != Token::Type::number || !tok_.integral) fail("exponent must be a nonnegative integer literal");
          if (tok_.value > 4294967295.0) fail("exponent too large");
          auto const k = static_cast<std::uint32_t>(tok_.value);
          advance();
          base = Expr::power(std::move(base), k);
        }
        return base;
      }

      Expr parse_primary() {
        switch (tok_.type) {
          case Token::Type::number: {
            double const v = tok_.value;
            advance();
            return Expr::number(v);
          }
          case Token::Type::ident: {
            if (tok_.text == "i") {
              advance();
              return Expr::imag_unit();
            }
            if (tok_.text == "x") {
              advance();
              return Expr::variable();
            }
            std::optional<Expr::Func> f;
            for (auto const &[name, func] : functions)
              if (tok_.text == name) f = func;
            if (!f) fail("unknown identifier '" + std::string(tok_.text) + "'");
            advance();
            if (!is_op('(')) fail("expected '(' after function name");
            advance();
            Expr arg = parse_expr();
            if (!is_op(')')) fail("expected ')'");
            advance();
            return Expr::call(*f, std::move(arg));
          }
          case Token::Type::op:
            if (is_op('(')) {
              advance();
              Expr inner = parse_expr();
              if (!is_op(')')) fail("expected ')'");
              advance();
              return inner;
            }
            fail("expected operand");
          case Token::Type::end: fail("expected operand");
        }
        fail("expected operand");
      }

      std::string_view text_;
      std::size_t pos_ = 0;
      Token tok_;
    };

  } // namespace

  Expr parse(std::string_view text) { return Parser(text).parse_all(); }

  // ---------------------------------------------------------------------------
  // Printing

  namespace {

    int precedence(Expr const &e) {
      switch (e.kind()) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::negate: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
      }
    }

    void print(Expr const &e, std::string &out);

    void print_wrapped(Expr const &e, bool parens, std::string &out) {
      if (parens) out += '(';
      print(e, out);
      if (parens) out += ')';
    }

    void print(Expr const &e, std::string &out) {
      switch (e.kind()) {
        case Expr::Kind::number: {
          char buf[400];
          auto res = std::to_chars(buf, buf + sizeof buf, e.value(), std::chars_format::fixed);
          out.append(buf, res.ptr);
          break;
        }
        case Expr::Kind::imag_unit: out += 'i'; break;
        case Expr::Kind::variable: out += 'x'; break;
        case Expr::Kind::negate:
          out += '-';
          print_wrapped(e.lhs(), precedence(e.lhs()) < 3, out);
          break;
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
        case Expr::Kind::div: {
          int const p = precedence(e);
          char const op = e.kind() == Expr::Kind::add ? '+' : e.kind() == Expr::Kind::sub ? '-' : e.kind() == Expr::Kind::mul ? '*' : '/';
          print_wrapped(e.lhs(), precedence(e.lhs()) < p, out);
          if (p == 1) {
            out += ' ';
            out += op;
            out += ' ';
          } else {
            out += op;
          }
          print_wrapped(e.rhs(), precedence(e.rhs()) <= p, out);
          break;
        }
        case Expr::Kind::pow:
          print_wrapped(e.lhs(), precedence(e.lhs()) < 5, out);
          out += '^';
          out += std::to_string(e.exponent());
          break;
        case Expr::Kind::call:
          out += func_name(e.func());
          out += '(';
          print(e.lhs(), out);
          out += ')';
          break;
      }
    }

  } // namespace

  std::string to_string(Expr const &e) {
    std::string out;
    print(e, out);
    return out;
  }

  // ---------------------------------------------------------------------------
  // Evaluation

  namespace {

    Complex ipow(Complex base, std::uint32_t k) {
      Complex result{1.0, 0.0};
      while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
      }
      return result;
    }

  } // namespace

  Complex eval(Expr const &e, Complex x) {
    switch (e.kind()) {
      case Expr::Kind::number: return {e.value(), 0.0};
      case Expr::Kind::imag_unit: return {0.0, 1.0};
      case Expr::Kind::variable: return x;
      case Expr::Kind::negate: return -eval(e.lhs(), x);
      case Expr::Kind::add: return eval(e.lhs(), x) + eval(e.rhs(), x);
      case Expr::Kind::sub: return eval(e.lhs(), x) - eval(e.rhs(), x);
      case Expr::Kind::mul: return eval(e.lhs(), x) * eval(e.rhs(), x);
      case Expr::Kind::div: {
        Complex const num = eval(e.lhs(), x);
        Complex const den = eval(e.rhs(), x);
        if (den == Complex{}) throw DivisionByZero();
        return num / den;
      }
      case Expr::Kind::pow: return ipow(eval(e.lhs(), x), e.exponent());
      case Expr::Kind::call: {
        Complex const a = eval(e.lhs(), x);
        switch (e.func()) {
          case Expr::Func::exp: return std::exp(a);
          case Expr::Func::sin: return std::sin(a);
          case Expr::Func::cos: return std::cos(a);
          case Expr::Func::log:
            if (a == Complex{}) throw LogOfZero();
            // +0.0 keeps a signed-zero imaginary part on the principal side of the cut
            return std::log(Complex{a.real(), a.imag() + 0.0});
          case Expr::Func::abs: return {std::abs(a), 0.0};
        }
      }
    }
    return {};
  }

} // namespace mulsemi
