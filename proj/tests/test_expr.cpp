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

#include "mulsemi/errors.hpp"
#include "mulsemi/expr.hpp"
#include "mulsemi/phi_field.hpp"
#include "oracles.hpp"
#include "parser_corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

using namespace mulsemi;
using namespace std::complex_literals;

namespace {

  std::size_t syntax_error_position(std::string_view text) {
    try {
      (void)parse(text);
    } catch (SyntaxError const &e) {
      return e.position();
    }
    return std::string_view::npos;
  }

  /// Literal text for an arbitrary complex number, e.g. "(-1.5 + 2.25*i)".
  std::string literal(Complex z) {
    auto mag = [](double v) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17f", std::abs(v));
      return std::string(buf);
    };
    std::string s = "(";
    if (z.real() < 0) s += "-";
    s += mag(z.real());
    s += z.imag() < 0 ? " - " : " + ";
    s += mag(z.imag()) + "*i)";
    return s;
  }

  Expr random_expr(oracles::Rng &rng, int depth) {
    auto leaf = [&]() {
      switch (oracles::uniform_index(rng, 0, 2)) {
        case 0: return Expr::number(static_cast<double>(oracles::uniform_index(rng, 0, 40)) / 8.0);
        case 1: return Expr::imag_unit();
        default: return Expr::variable();
      }
    };
    if (depth == 0) return leaf();
    switch (oracles::uniform_index(rng, 0, 7)) {
      case 0: return leaf();
      case 1: return Expr::negate(random_expr(rng, depth - 1));
      case 2: return Expr::power(random_expr(rng, depth - 1), static_cast<std::uint32_t>(oracles::uniform_index(rng, 0, 4)));
      case 3:
        return Expr::call(static_cast<Expr::Func>(oracles::uniform_index(rng, 0, 4)), random_expr(rng, depth - 1));
      default: {
        static constexpr std::array ops{Expr::Kind::add, Expr::Kind::sub, Expr::Kind::mul, Expr::Kind::div};
        return Expr::binary(ops[oracles::uniform_index(rng, 0, 3)], random_expr(rng, depth - 1), random_expr(rng, depth - 1));
      }
    }
  }

}  // namespace

TEST_CASE("parse builds the expected trees") {
  auto i_x = parse("i*x");
  CHECK(i_x == Expr::binary(Expr::Kind::mul, Expr::imag_unit(), Expr::variable()));
  CHECK(parse("2+3*x")
        == Expr::binary(Expr::Kind::add, Expr::number(2), Expr::binary(Expr::Kind::mul, Expr::number(3), Expr::variable())));
  CHECK(parse("-x^2") == Expr::negate(Expr::power(Expr::variable(), 2)));
  CHECK(parse("x - 1 - 2") == Expr::binary(Expr::Kind::sub, Expr::binary(Expr::Kind::sub, Expr::variable(), Expr::number(1)), Expr::number(2)));
  CHECK(parse(" exp ( x ) ") == Expr::call(Expr::Func::exp, Expr::variable()));
  CHECK_FALSE(parse("2+3*x") == parse("(2+3)*x"));
  CHECK(parse("x").uses_variable());
  CHECK_FALSE(parse("exp(i)*2").uses_variable());
}

TEST_CASE("syntax errors carry positions") {
  CHECK(syntax_error_position("exp(i*x") == 7);
  for (auto const &m : corpus::malformed) {
    CAPTURE(m.text);
    CHECK(syntax_error_position(m.text) == m.position);
  }
  CHECK(syntax_error_position("x^2.5") == 2);
  CHECK(syntax_error_position("é") == 0);
  try {
    (void)parse("1 + )");
    FAIL("expected SyntaxError");
  } catch (SyntaxError const &e) {
    CHECK(std::string(e.what()).find("at position 4") != std::string::npos);
  }
}

TEST_CASE("golden corpus round-trips and matches explicit grouping") {
  oracles::Rng rng(31);
  for (auto const &g : corpus::goldens) {
    CAPTURE(g.text);
    auto e = parse(g.text);
    CHECK(to_string(e) == g.canonical);
    CHECK(parse(to_string(e)) == e);
    auto ref = parse(g.parenthesized);
    CHECK(ref == e);
    for (int k = 0; k < 20; ++k) {
      Complex x{oracles::uniform(rng, 0.5, 4.0), k % 2 ? oracles::uniform(rng, -1.0, 1.0) : 0.0};
      Complex a = eval(e, x), b = eval(ref, x);
      CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("printing round-trips random trees") {
  oracles::Rng rng(32);
  for (int k = 0; k < 2000; ++k) {
    auto e = random_expr(rng, 5);
    auto text = to_string(e);
    CAPTURE(text);
    CHECK(parse(text) == e);
  }
}

TEST_CASE("precedence agrees with manual parenthesization") {
  oracles::Rng rng(33);
  auto e = parse("2+3*x");
  auto grouped = parse("(2+3)*x");
  for (int k = 0; k < 100; ++k) {
    Complex x = oracles::random_complex(rng, 5.0);
    CHECK(std::abs(eval(e, x) - (2.0 + 3.0 * x)) <= 1e-14 * std::max(1.0, std::abs(x)));
    CHECK(std::abs(eval(grouped, x) - 5.0 * x) <= 1e-14 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("eval") {
  CHECK(std::abs(eval(parse("exp(i*x)"), std::numbers::pi) - Complex{-1.0}) <= 1e-15);
  CHECK(eval(parse("-x^2"), 3.0) == Complex{-9.0});
  CHECK_THROWS_AS((void)eval(parse("1/x"), 0.0), DivisionByZero);
  CHECK_THROWS_AS((void)eval(parse("log(x - 1)"), 1.0), LogOfZero);
  CHECK(eval(parse("x^0"), 0.0) == Complex{1.0});
  CHECK(eval(parse("abs(3 + 4*i)"), 0.0) == Complex{5.0});
  CHECK(eval(parse("i^2"), 0.0) == Complex{-1.0});
  CHECK(std::abs(eval(parse("log(-1)"), 0.0) - Complex{0.0, std::numbers::pi}) <= 1e-15);
  CHECK(eval(parse("x^10"), 2.0) == Complex{1024.0});
}

TEST_CASE("exp(a)*exp(b) equals exp(a+b)") {
  oracles::Rng rng(34);
  for (int k = 0; k < 500; ++k) {
    Complex a = oracles::random_complex(rng, 10.0), b = oracles::random_complex(rng, 10.0);
    auto lhs = parse("exp(" + literal(a) + ")*exp(" + literal(b) + ")");
    auto rhs = parse("exp(" + literal(a) + " + " + literal(b) + ")");
    Complex l = eval(lhs, 0.0), r = eval(rhs, 0.0);
    CHECK(std::abs(l - r) <= 1e-13 * std::abs(r));
  }
}

TEST_CASE("build_phi") {
  auto field = build_phi(PhiSpec::parse({"i*x", "-x^2"}), SpaceModel::truncated_naturals(3));
  REQUIRE(field.size() == 3);
  CHECK(field.at(0) == CentralOperator({1i, -1.0}));
  CHECK(field.at(1) == CentralOperator({2i, -4.0}));
  CHECK(field.at(2) == CentralOperator({3i, -9.0}));
  CHECK(field.source().has_value());

  auto zero = build_phi(PhiSpec::parse({"0"}), SpaceModel::interval_grid(-1.0, 1.0, 0.5));
  for (auto const &op : zero.ops()) CHECK(op == CentralOperator::zero(1));

  auto grid = SpaceModel::interval_grid(0.0, 10.0, 0.1);
  auto q = build_phi(PhiSpec::parse({"i*x"}), grid);
  REQUIRE(q.size() == 101);
  for (std::size_t p = 0; p < q.size(); ++p) CHECK(q.at(p)[0] == Complex{0.0, grid.coordinate(p)});

  auto finite = build_phi(PhiSpec::parse({"x"}), SpaceModel::finite(4));
  CHECK(finite.at(3)[0] == Complex{4.0});

  CHECK_THROWS_AS(PhiSpec::parse({}), std::invalid_argument);
  CHECK_THROWS_AS(PhiSpec::parse({"x +"}), SyntaxError);
}

TEST_CASE("build_phi tags evaluation errors with the point") {
  try {
    (void)build_phi(PhiSpec::parse({"1", "1/x"}), SpaceModel::interval_grid(0.0, 1.0, 0.25));
    FAIL("expected DivisionByZero");
  } catch (DivisionByZero const &e) {
    CHECK(e.point() == std::optional<std::size_t>{0});
    CHECK(e.entry() == std::optional<std::size_t>{1});
  }
  try {
    (void)build_phi(PhiSpec::parse({"log(x - 2)"}), SpaceModel::truncated_naturals(5));
    FAIL("expected LogOfZero");
  } catch (LogOfZero const &e) {
    CHECK(e.point() == std::optional<std::size_t>{1});
  }
}
