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
 * @brief Discretized base spaces and sections of C_0(Omega, E).
 */

#include "mulsemi/lattice.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mulsemi {

  /**
   * @brief Finite model of a locally compact space.
   *
   * Points are ordered. The coordinate of a point is what the symbol DSL sees as x: the 1-based
   * index on finite sets, n on truncated naturals, and the real grid coordinate on interval grids.
   * Truncated naturals always have an unbounded direction; interval grids have one when flagged, in
   * which case b is read as a truncation of [a, infinity).
   */
  class SpaceModel {
    public:
    enum class Kind { finite, truncated_naturals, interval_grid };

    /// m labelled points; labels default to "1", ..., "m".
    static SpaceModel finite(std::size_t m, std::vector<std::string> labels = {});
    static SpaceModel truncated_naturals(std::size_t n);
    static SpaceModel interval_grid(double a, double b, double step, bool unbounded = false);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] std::span<const double> coordinates() const noexcept { return coords_; }
    [[nodiscard]] double coordinate(std::size_t i) const { return coords_.at(i); }
    [[nodiscard]] std::string label(std::size_t i) const;
    [[nodiscard]] bool has_unbounded_direction() const noexcept { return unbounded_; }

    [[nodiscard]] std::vector<std::string> const &labels() const noexcept { return labels_; }
    [[nodiscard]] double grid_a() const noexcept { return a_; }
    [[nodiscard]] double grid_b() const noexcept { return b_; }
    [[nodiscard]] double grid_step() const noexcept { return step_; }

    friend bool operator==(SpaceModel const &, SpaceModel const &) = default;

    private:
    SpaceModel() = default;

    Kind kind_ = Kind::finite;
    std::vector<double> coords_;
    std::vector<std::string> labels_;
    double a_ = 0.0, b_ = 0.0, step_ = 0.0;
    bool unbounded_ = false;
  };

  /// Fraction of trailing points inspected by vanishing_check.
  inline constexpr double vanishing_tail_fraction = 0.1;

  /// Index window [first, last) outside of which a section is exactly zero.
  struct SupportWindow {
    std::size_t first = 0;
    std::size_t last = 0;
    friend bool operator==(SupportWindow const &, SupportWindow const &) = default;
  };

  /// A section s : Omega -> E, stored point-major with a shared dimension and norm.
  class Section {
    public:
    /// Throws DimensionMismatch unless there is one value per point, all of dimension n with the same norm.
    Section(SpaceModel space, std::vector<LatticeVector> const &values);

    /// Flat values, point-major: values[p * dim + i].
    Section(SpaceModel space, std::size_t dim, NormSpec norm_spec, std::vector<Complex> values);

    static Section zero(SpaceModel space, std::size_t dim, NormSpec norm_spec);

    [[nodiscard]] SpaceModel const &space() const noexcept { return space_; }
    [[nodiscard]] std::size_t size() const noexcept { return space_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] NormSpec const &norm_spec() const noexcept { return norm_spec_; }

    [[nodiscard]] std::span<const Complex> point_values(std::size_t p) const {
      return std::span<const Complex>(values_).subspan(p * dim_, dim_);
    }
    [[nodiscard]] std::span<Complex> point_values(std::size_t p) { return std::span<Complex>(values_).subspan(p * dim_, dim_); }
    [[nodiscard]] LatticeVector at(std::size_t p) const;
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }

    /// Support window, if the section was declared compactly supported.
    [[nodiscard]] std::optional<SupportWindow> const &support() const noexcept { return support_; }

    /// Copy with every value outside [first, last) set to zero and the support flag set.
    [[nodiscard]] Section restricted_to(SupportWindow window) const;

    [[nodiscard]] bool combinable(Section const &other) const noexcept {
      return dim_ == other.dim_ && norm_spec_ == other.norm_spec_ && space_ == other.space_;
    }

    Section &operator+=(Section const &other);
    Section &operator-=(Section const &other);
    Section &operator*=(Complex alpha);

    friend Section operator+(Section a, Section const &b) { return a += b; }
    friend Section operator-(Section a, Section const &b) { return a -= b; }
    friend Section operator*(Complex alpha, Section s) { return s *= alpha; }

    friend bool operator==(Section const &a, Section const &b) {
      return a.combinable(b) && a.values_ == b.values_;
    }

    private:

    SpaceModel space_;
    std::size_t dim_;
    NormSpec norm_spec_;
    std::vector<Complex> values_;
    std::optional<SupportWindow> support_;
  };

  /// sup over points of vec_norm(s(x)).
  [[nodiscard]] double section_norm(Section const &s);

  struct VanishingReport {
    bool vanishes = true;
    /// max of vec_norm over the trailing window; 0 for models without an unbounded direction.
    double tail_sup = 0.0;
    /// First index of the trailing window (== size() when no window was inspected).
    std::size_t tail_first = 0;
  };

  /**
   * @brief Approximate test of vanishing at infinity.
   *
   * For models with an unbounded direction the trailing ceil(10%) of points are inspected and the
   * section counts as vanishing when their sup norm is <= eps. Compact models and sections with a
   * declared support window always vanish.
   */
  [[nodiscard]] VanishingReport vanishing_check(Section const &s, double eps);

  /// s(x) = f(x) z.
  [[nodiscard]] Section tensor_section(SpaceModel const &space, std::span<const double> f, LatticeVector const &z);

  /// Complex-valued scalar factor variant of tensor_section.
  [[nodiscard]] Section tensor_section(SpaceModel const &space, std::span<const Complex> f, LatticeVector const &z);

  /// Scalar function with f(peak) = 1, sup |f| = 1, supported on the single point `peak`.
  [[nodiscard]] std::vector<double> peak_function(SpaceModel const &space, std::size_t peak);

} // namespace mulsemi
