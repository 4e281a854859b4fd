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
 * @brief Golden expressions shared by the parser unit tests and the acceptance suite.
 */

#include <array>
#include <cstddef>
#include <string_view>

namespace corpus {

  struct Golden {
    /// Input as a user would type it.
    std::string_view text;
    /// Expected canonical printing.
    std::string_view canonical;
    /// The same expression with every grouping made explicit.
    std::string_view parenthesized;
  };

  inline constexpr std::array<Golden, 30> goldens{{
      {"i*x", "i*x", "(i*x)"},
      {"2+3*x", "2 + 3*x", "(2 + (3*x))"},
      {"(2+3)*x", "(2 + 3)*x", "((2 + 3)*x)"},
      {"-x^2", "-x^2", "(-(x^2))"},
      {"(-x)^2", "(-x)^2", "((-x)^2)"},
      {"1 - x - 2", "1 - x - 2", "((1 - x) - 2)"},
      {"1 - (x - 2)", "1 - (x - 2)", "(1 - (x - 2))"},
      {"x/2/3", "x/2/3", "((x/2)/3)"},
      {"x/(2/3)", "x/(2/3)", "(x/(2/3))"},
      {"x*2/3", "x*2/3", "((x*2)/3)"},
      {"x^2^3", "(x^2)^3", "((x^2)^3)"},
      {"2*-x", "2*-x", "(2*(-x))"},
      {"--x", "--x", "(-(-x))"},
      {"-x*-x", "-x*-x", "((-x)*(-x))"},
      {"exp(i*x)", "exp(i*x)", "exp((i*x))"},
      {"exp(-x^2)", "exp(-x^2)", "exp((-(x^2)))"},
      {"1 + i*x", "1 + i*x", "(1 + (i*x))"},
      {"i*sin(3*x) - x", "i*sin(3*x) - x", "((i*sin((3*x))) - x)"},
      {"-exp(x)", "-exp(x)", "(-exp(x))"},
      {"-x^2/4 + i*cos(x)", "-x^2/4 + i*cos(x)", "(((-(x^2))/4) + (i*cos(x)))"},
      {"1/(2*x)", "1/(2*x)", "(1/(2*x))"},
      {"x*(1 - x)", "x*(1 - x)", "(x*(1 - x))"},
      {"abs(x - 3)*log(x + 1)", "abs(x - 3)*log(x + 1)", "(abs((x - 3))*log((x + 1)))"},
      {"log(abs(x) + 1)", "log(abs(x) + 1)", "log((abs(x) + 1))"},
      {"  0.5 *  x ", "0.5*x", "(0.5*x)"},
      {"3.25 - 0.125*i", "3.25 - 0.125*i", "(3.25 - (0.125*i))"},
      {"(x + i)^3", "(x + i)^3", "((x + i)^3)"},
      {"cos(x)^2 + sin(x)^2", "cos(x)^2 + sin(x)^2", "((cos(x)^2) + (sin(x)^2))"},
      {"exp(1)*exp(2*i)", "exp(1)*exp(2*i)", "(exp(1)*exp((2*i)))"},
      {"-(x + 1)*(x - 1)", "-(x + 1)*(x - 1)", "((-(x + 1))*(x - 1))"},
  }};

  struct Malformed {
    std::string_view text;
    std::size_t position;
  };

  inline constexpr std::array<Malformed, 10> malformed{{
      {"exp(i*x", 7},
      {"", 0},
      {"1 +", 3},
      {"x $ 2", 2},
      {"foo(x)", 0},
      {"sin x", 4},
      {"(x))", 3},
      {"x^-2", 2},
      {"2 x", 2},
      {"1.", 1},
  }};

}  // namespace corpus
