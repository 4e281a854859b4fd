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
 * @brief The multiplication operator (M_phi s)(x) = phi(x) s(x) on a sampled C_0(Omega, E).
 */

#include "mulsemi/phi_field.hpp"
#include "mulsemi/space.hpp"

#include <limits>
#include <span>
#include <vector>

namespace mulsemi {

  inline constexpr double default_domain_tolerance = 1e-6;
  inline constexpr double default_spectrum_threshold = 1e6;
  inline constexpr double default_spectrum_pole_tol = 1e-9;

  class MulOperator {
    public:
    explicit MulOperator(PhiField phi, double domain_tolerance = default_domain_tolerance);

    [[nodiscard]] PhiField const &phi() const noexcept { return phi_; }
    [[nodiscard]] double domain_tolerance() const noexcept { return domain_tolerance_; }
    [[nodiscard]] SpaceModel const &space() const noexcept { return phi_.space(); }
    [[nodiscard]] std::size_t dim() const noexcept { return phi_.dim(); }

    private:
    PhiField phi_;
    double domain_tolerance_;
  };

  /// Pointwise phi(x) s(x). Throws DimensionMismatch on a different space or dimension.
  [[nodiscard]] Section apply_mulop(MulOperator const &m, Section const &s);

  struct DomainReport {
    bool member = false;
    VanishingReport evidence;
  };

  /// s is in the maximal domain when phi s still vanishes at infinity (to eps).
  [[nodiscard]] DomainReport in_domain(MulOperator const &m, Section const &s, double eps);
  [[nodiscard]] inline DomainReport in_domain(MulOperator const &m, Section const &s) { return in_domain(m, s, m.domain_tolerance()); }

  /// ||M_phi|| = sup_x ||phi(x)||.
  [[nodiscard]] double operator_norm(MulOperator const &m);

  enum class GrowthFlag { increasing, saturating };

  [[nodiscard]] std::string_view to_string(GrowthFlag f) noexcept;

  /**
   * @brief Growth heuristic for a per-point profile.
   *
   * increasing when the trailing half of `profile` is nondecreasing and its last value exceeds its
   * first by at least 5%, saturating otherwise.
   */
  [[nodiscard]] GrowthFlag classify_growth(std::span<const double> profile);

  struct BoundednessReport {
    double sampled_norm = 0.0;
    GrowthFlag growth_flag = GrowthFlag::saturating;
  };

  /**
   * @brief Sampled norm plus growth heuristic for unboundedness of the untruncated symbol.
   *
   * Models without an unbounded direction are compact and always report saturating. Others need
   * at least 10 points (std::invalid_argument otherwise).
   */
  [[nodiscard]] BoundednessReport is_bounded(MulOperator const &m);

  /// Entrywise reciprocal symbol. Throws NotInvertible carrying the point and entry of smallest modulus.
  [[nodiscard]] MulOperator invert(MulOperator const &m, double tol = default_pole_tol);

  struct ResolventReport {
    /// sup_x ||R(lambda, phi(x))||; +infinity when lambda is a pole.
    double sup = 0.0;
    /// min over points and entries of |lambda - phi_i(x)|.
    double min_distance = 0.0;
  };

  [[nodiscard]] ResolventReport resolvent_sup(MulOperator const &m, Complex lambda, double pole_tol = default_spectrum_pole_tol);

  enum class SpectralClass { spectrum, resolvent_set };

  [[nodiscard]] std::string_view to_string(SpectralClass c) noexcept;

  struct SpectrumEntry {
    Complex lambda;
    double min_distance = 0.0;
    double resolvent_sup = 0.0;
    SpectralClass cls = SpectralClass::resolvent_set;
  };

  struct SpectrumReport {
    std::vector<SpectrumEntry> entries;
    double threshold = default_spectrum_threshold;
    double pole_tol = default_spectrum_pole_tol;
  };

  /// spectrum iff min_distance <= pole_tol or resolvent_sup >= threshold.
  [[nodiscard]] SpectrumReport spectrum_scan(MulOperator const &m, std::span<const Complex> grid,
                                             double threshold = default_spectrum_threshold,
                                             double pole_tol = default_spectrum_pole_tol);

} // namespace mulsemi
