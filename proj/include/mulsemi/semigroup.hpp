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
 * @brief The multiplication semigroup T(t) s = e^{t phi(.)} s(.).
 */

#include "mulsemi/mulop.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace mulsemi {

  /// w = max over points and entries of Re phi_i(x); ||T(t)|| = e^{w t}.
  struct GrowthBound {
    double w = 0.0;
  };

  /// Evaluates T(t) for a fixed multiplication operator. Read-only after construction.
  class SemigroupEvaluator {
    public:
    explicit SemigroupEvaluator(MulOperator m);

    [[nodiscard]] MulOperator const &op() const noexcept { return m_; }
    [[nodiscard]] PhiField const &phi() const noexcept { return m_.phi(); }

    /// Per point, max_i Re phi_i(x).
    [[nodiscard]] std::span<const double> real_part_bounds() const noexcept { return re_max_; }
    [[nodiscard]] GrowthBound growth_bound() const noexcept { return {w_}; }

    /// e^{t phi(x)} at point p.
    [[nodiscard]] CentralOperator multiplier(std::size_t p, double t) const;

    /// The whole field x -> e^{t phi(x)}.
    [[nodiscard]] PhiField multiplier_field(double t) const;

    private:
    MulOperator m_;
    std::vector<double> re_max_;
    double w_;
  };

  /// T(t)s; t = 0 returns s unchanged.
  [[nodiscard]] Section evolve(SemigroupEvaluator const &sg, Section const &s, double t);

  /// ||T(t)|| = e^{w t}.
  [[nodiscard]] double semigroup_norm(SemigroupEvaluator const &sg, double t);

  struct T0Report {
    /// Always true on truncated models; read together with growth_flag.
    bool finite = true;
    double value = 0.0;
    /// Growth of x -> ||e^{t0 phi(x)}||, hinting whether the bound survives without truncation.
    GrowthFlag growth_flag = GrowthFlag::saturating;
  };

  /// sup_x ||e^{t0 phi(x)}|| for t0 in (0, 1].
  [[nodiscard]] T0Report check_t0_condition(SemigroupEvaluator const &sg, double t0);

  /// section_norm(T(t1 + t2)s - T(t1)T(t2)s).
  [[nodiscard]] double check_semigroup_law(SemigroupEvaluator const &sg, Section const &s, double t1, double t2);

  struct DiffQuotientReport {
    Section quotient;
    /// section_norm(quotient - M_phi s)
    double error = 0.0;
  };

  /// (T(h)s - s)/h against M_phi s. s must lie in the domain (std::invalid_argument otherwise).
  [[nodiscard]] DiffQuotientReport generator_diff_quotient(SemigroupEvaluator const &sg, Section const &s, double h);

  struct WitnessPoint {
    std::size_t point = 0;
    /// 1 / ||phi(x_n)||
    double t = 0.0;
    /// ||e^{t_n phi(x_n)} - I||
    double lower_bound = 0.0;
  };

  /**
   * @brief Sequence (x_n, t_n) along which ||T(t_n) - I|| stays away from zero.
   *
   * constant_t marks witnesses whose times do not shrink (all t_n equal), which is no obstruction
   * to uniform continuity.
   */
  struct ContinuityWitness {
    std::vector<WitnessPoint> points;
    double delta = 0.0;
    bool constant_t = false;
  };

  inline constexpr std::size_t witness_max_points = 10;
  inline constexpr double witness_obstruction_cutoff = 0.1;

  /// Scans the (at most 10) points of largest ||phi(x)||. None if every lower bound is < 0.1.
  [[nodiscard]] std::optional<ContinuityWitness> uniform_continuity_witness(SemigroupEvaluator const &sg);

  struct ContinuityReport {
    std::vector<double> t_grid;
    /// ||T(t)s - s||
    std::vector<double> strong_profile;
    /// sup_x ||e^{t phi(x)} - I||
    std::vector<double> uniform_profile;
    std::optional<ContinuityWitness> witness;
  };

  /// t_grid must be positive and strictly increasing.
  [[nodiscard]] ContinuityReport continuity_profiles(SemigroupEvaluator const &sg, Section const &s, std::span<const double> t_grid);

  inline constexpr double cocycle_tolerance = 1e-8;

  /**
   * @brief Recovers phi from sampled multipliers m_h = e^{h phi}.
   *
   * Every h of h_seq must be a key of `samples`. Any pair t, s of keys with t + s also a key is
   * checked for m_{t+s} = m_t m_s; a defect above 1e-8 (relative to max(1, |m_{t+s}|)) raises
   * CocycleViolation. Per entry, the quotients log(m_h)/h are extrapolated to h = 0 by
   * polynomial (Richardson) extrapolation over h_seq, with the logarithm branch fixed by the
   * smallest h. Throws NotInvertible if a sampled multiplier entry is zero.
   */
  [[nodiscard]] PhiField recover_phi_from_semigroup(std::map<double, PhiField> const &samples, std::span<const double> h_seq);

} // namespace mulsemi
