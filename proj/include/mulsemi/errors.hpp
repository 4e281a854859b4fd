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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mulsemi {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
    public:
    using std::runtime_error::runtime_error;
  };

  /// Operands of different dimension, norm or base space were combined.
  class DimensionMismatch : public Error {
    public:
    using Error::Error;
  };

  /// A central operator (or a whole symbol) has an entry too close to zero.
  class NotInvertible : public Error {
    public:
    NotInvertible(std::string const &what, std::optional<std::size_t> point, std::size_t entry, double modulus)
       : Error(what), point_(point), entry_(entry), modulus_(modulus) {}

    /// Offending point index, when raised for a field rather than a single operator.
    [[nodiscard]] std::optional<std::size_t> point() const noexcept { return point_; }
    [[nodiscard]] std::size_t entry() const noexcept { return entry_; }
    [[nodiscard]] double modulus() const noexcept { return modulus_; }

    private:
    std::optional<std::size_t> point_;
    std::size_t entry_;
    double modulus_;
  };

  /// lambda coincides (within tolerance) with a diagonal entry.
  class LambdaInPointSpectrum : public Error {
    public:
    LambdaInPointSpectrum(std::string const &what, std::size_t entry) : Error(what), entry_(entry) {}
    [[nodiscard]] std::size_t entry() const noexcept { return entry_; }

    private:
    std::size_t entry_;
  };

  /// Malformed expression text. position() is a 0-based byte offset into the input.
  class SyntaxError : public Error {
    public:
    SyntaxError(std::string const &message, std::size_t position)
       : Error(message + " at position " + std::to_string(position)), message_(message), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }
    [[nodiscard]] std::string const &message() const noexcept { return message_; }

    private:
    std::string message_;
    std::size_t position_;
  };

  /// Failure while evaluating an expression. build_phi tags it with the point and entry.
  class EvalError : public Error {
    public:
    explicit EvalError(std::string const &message) : Error(message), message_(message) {}

    void tag_location(std::size_t point, std::size_t entry) {
      point_ = point;
      entry_ = entry;
      static_cast<std::runtime_error &>(*this) =
         std::runtime_error(message_ + " (point " + std::to_string(point) + ", entry " + std::to_string(entry) + ")");
    }

    [[nodiscard]] std::optional<std::size_t> point() const noexcept { return point_; }
    [[nodiscard]] std::optional<std::size_t> entry() const noexcept { return entry_; }

    private:
    std::string message_;
    std::optional<std::size_t> point_;
    std::optional<std::size_t> entry_;
  };

  class DivisionByZero : public EvalError {
    public:
    DivisionByZero() : EvalError("division by zero") {}
  };

  class LogOfZero : public EvalError {
    public:
    LogOfZero() : EvalError("log of zero") {}
  };

  /// Sampled multipliers violate m(t + s) = m(t) m(s).
  class CocycleViolation : public Error {
    public:
    CocycleViolation(std::string const &what, double t, double s, double defect)
       : Error(what), t_(t), s_(s), defect_(defect) {}

    [[nodiscard]] double t() const noexcept { return t_; }
    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] double defect() const noexcept { return defect_; }

    private:
    double t_, s_, defect_;
  };

  /// Invalid scenario file. line() is 1-based; 0 when the error is not tied to a line.
  class ConfigError : public Error {
    public:
    ConfigError(std::string const &message, std::size_t line, std::string field = {})
       : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line), field_(std::move(field)) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::string const &field() const noexcept { return field_; }

    private:
    std::size_t line_;
    std::string field_;
  };

  /// An analysis of a scenario run failed; wraps the underlying error message.
  class AnalysisError : public Error {
    public:
    AnalysisError(std::string analysis, std::string const &what)
       : Error(analysis + ": " + what), analysis_(std::move(analysis)) {}

    [[nodiscard]] std::string const &analysis() const noexcept { return analysis_; }

    private:
    std::string analysis_;
  };

} // namespace mulsemi
