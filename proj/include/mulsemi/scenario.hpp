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
 * @brief Scenario files: a flat, line-oriented description of one experiment.
 *
 * Format: `[section]` headers, `key = value` lines, `#` comments. Expression values are
 * double-quoted; lists are comma separated. Analyses are sections named `[analysis <name>]`.
 *
 *     [scenario]
 *     name = example
 *
 *     [space]
 *     kind = truncated_naturals      # finite | truncated_naturals | interval_grid
 *     N = 100                        # finite: points = m, labels = a, b, ...
 *                                    # interval_grid: a, b, step, unbounded = true|false
 *     [lattice]
 *     dimension = 2
 *     norm = sup                     # sup | p (with p = ...) | weighted_sup (with weights = ...)
 *
 *     [phi]
 *     entries = "i*x", "-x^2"
 *     domain_tolerance = 1e-06
 *
 *     [section]
 *     entries = "1/x^2", "1/x^2"
 *
 *     [analysis spectrum]
 *     points = "i", "2*i", "1"
 *     grid_re = -1, 1, 5             # lo, hi, count (optional, with grid_im)
 *     grid_im = -1, 1, 5
 *     threshold = 1000000
 *     pole_tol = 1e-09
 *
 *     [output]
 *     format = csv
 *     path = out
 */

#include "mulsemi/lattice.hpp"
#include "mulsemi/phi_field.hpp"
#include "mulsemi/space.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mulsemi {

  /// lo, lo + (hi - lo)/(count - 1), ..., hi
  struct LinearRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 1;
    [[nodiscard]] std::vector<double> values() const;
    friend bool operator==(LinearRange const &, LinearRange const &) = default;
  };

  struct NormAnalysis {
    friend bool operator==(NormAnalysis const &, NormAnalysis const &) = default;
  };

  struct InvertAnalysis {
    double tol = default_pole_tol;
    friend bool operator==(InvertAnalysis const &, InvertAnalysis const &) = default;
  };

  struct SpectrumAnalysis {
    /// Constant expressions (no x).
    std::vector<Expr> points;
    std::optional<LinearRange> grid_re;
    std::optional<LinearRange> grid_im;
    double threshold = 1e6;
    double pole_tol = 1e-9;

    /// Explicit points followed by the rectangular grid (real part varying fastest).
    [[nodiscard]] std::vector<Complex> lambda_grid() const;
    friend bool operator==(SpectrumAnalysis const &, SpectrumAnalysis const &) = default;
  };

  struct EvolveAnalysis {
    std::vector<double> t;
    friend bool operator==(EvolveAnalysis const &, EvolveAnalysis const &) = default;
  };

  struct ContinuityAnalysis {
    std::vector<double> t;
    friend bool operator==(ContinuityAnalysis const &, ContinuityAnalysis const &) = default;
  };

  struct GeneratorAnalysis {
    std::vector<double> h{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    /// 1-based inclusive point range the section is restricted to before differencing.
    std::optional<std::pair<std::size_t, std::size_t>> support;
    friend bool operator==(GeneratorAnalysis const &, GeneratorAnalysis const &) = default;
  };

  struct T0Analysis {
    double t0 = 1.0;
    friend bool operator==(T0Analysis const &, T0Analysis const &) = default;
  };

  struct RecoverAnalysis {
    std::vector<double> h{1e-2, 5e-3, 2.5e-3};
    friend bool operator==(RecoverAnalysis const &, RecoverAnalysis const &) = default;
  };

  using Analysis = std::variant<NormAnalysis, InvertAnalysis, SpectrumAnalysis, EvolveAnalysis, ContinuityAnalysis, GeneratorAnalysis,
                                T0Analysis, RecoverAnalysis>;

  /// Section-header name of an analysis ("norm", "spectrum", ...).
  [[nodiscard]] std::string_view analysis_name(Analysis const &a) noexcept;

  enum class OutputFormat { csv, json };

  struct OutputSpec {
    std::optional<OutputFormat> format;
    std::optional<std::string> path;
    friend bool operator==(OutputSpec const &, OutputSpec const &) = default;
  };

  struct Scenario {
    std::string name;
    SpaceModel space = SpaceModel::finite(1);
    NormSpec norm = NormSpec::sup();
    PhiSpec phi = PhiSpec({Expr::number(0.0)});
    double domain_tolerance = 1e-6;
    std::optional<PhiSpec> section;
    std::vector<Analysis> analyses;
    OutputSpec output;

    [[nodiscard]] std::size_t dimension() const noexcept { return phi.dim(); }
    friend bool operator==(Scenario const &, Scenario const &) = default;
  };

  /// Parses and validates scenario text. Throws ConfigError; phi/section syntax errors surface as SyntaxError.
  [[nodiscard]] Scenario parse_scenario(std::string_view text);

  /// Reads the file at `path` and parses it.
  [[nodiscard]] Scenario load_scenario(std::string const &path);

  /// Canonical scenario text; parse_scenario(to_text(s)) == s.
  [[nodiscard]] std::string to_text(Scenario const &s);

  /// Names of the built-in scenarios.
  [[nodiscard]] std::vector<std::string> builtin_names();

  /// Scenario text of a built-in; throws ConfigError for unknown names.
  [[nodiscard]] std::string_view builtin_text(std::string_view name);

  [[nodiscard]] Scenario load_builtin(std::string_view name);

  /// Shortest decimal text that reads back to the same double.
  [[nodiscard]] std::string format_double(double v);

} // namespace mulsemi
