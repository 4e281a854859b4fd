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

#include "mulsemi/mulop.hpp"

#include "mulsemi/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mulsemi {

  MulOperator::MulOperator(PhiField phi, double domain_tolerance) : phi_(std::move(phi)), domain_tolerance_(domain_tolerance) {
    if (!(domain_tolerance_ > 0.0)) throw std::invalid_argument("domain tolerance must be positive");
  }

  Section apply_mulop(MulOperator const &m, Section const &s) {
    if (!(s.space() == m.space())) throw DimensionMismatch("section and operator live on different spaces");
    if (s.dim() != m.dim()) throw DimensionMismatch("section dimension " + std::to_string(s.dim()) + " != symbol dimension " + std::to_string(m.dim()));
    Section out = s;
    for (std::size_t p = 0; p < s.size(); ++p) {
      auto v = out.point_values(p);
      auto const &op = m.phi().at(p);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] *= op[i];
    }
    return out;
  }

  DomainReport in_domain(MulOperator const &m, Section const &s, double eps) {
    auto evidence = vanishing_check(apply_mulop(m, s), eps);
    return {evidence.vanishes, evidence};
  }

  double operator_norm(MulOperator const &m) { return m.phi().sampled_sup_norm(); }

  std::string_view to_string(GrowthFlag f) noexcept { return f == GrowthFlag::increasing ? "increasing" : "saturating"; }

  GrowthFlag classify_growth(std::span<const double> profile) {
    if (profile.size() < 2) return GrowthFlag::saturating;
    auto const tail = profile.subspan(profile.size() / 2);
    for (std::size_t k = 1; k < tail.size(); ++k)
      if (tail[k] < tail[k - 1]) return GrowthFlag::saturating;
    double const first = tail.front(), last = tail.back();
    if (last > 0.0 && last >= 1.05 * first) return GrowthFlag::increasing;
    return GrowthFlag::saturating;
  }

  BoundednessReport is_bounded(MulOperator const &m) {
    BoundednessReport r;
    r.sampled_norm = operator_norm(m);
    if (!m.space().has_unbounded_direction()) return r;
    if (m.space().size() < 10) throw std::invalid_argument("is_bounded needs at least 10 points on a non-compact model");
    std::vector<double> profile;
    profile.reserve(m.phi().size());
    for (auto const &op : m.phi().ops()) profile.push_back(central_op_norm(op));
    r.growth_flag = classify_growth(profile);
    return r;
  }

  MulOperator invert(MulOperator const &m, double tol) {
    double min_mod = std::numeric_limits<double>::infinity();
    std::size_t min_p = 0, min_i = 0;
    for (std::size_t p = 0; p < m.phi().size(); ++p) {
      auto const &op = m.phi().at(p);
      for (std::size_t i = 0; i < op.dim(); ++i) {
        double const a = std::abs(op[i]);
        if (a < min_mod) {
          min_mod = a;
          min_p = p;
          min_i = i;
        }
      }
    }
    if (min_mod <= tol)
      throw NotInvertible("symbol is not invertible: entry " + std::to_string(min_i) + " at point " + m.space().label(min_p) + " has modulus "
                             + std::to_string(min_mod),
                          min_p, min_i, min_mod);
    std::vector<CentralOperator> ops;
    ops.reserve(m.phi().size());
    for (auto const &op : m.phi().ops()) ops.push_back(central_inverse(op, tol));
    return MulOperator(PhiField(m.space(), std::move(ops)), m.domain_tolerance());
  }

  ResolventReport resolvent_sup(MulOperator const &m, Complex lambda, double pole_tol) {
    ResolventReport r;
    r.min_distance = std::numeric_limits<double>::infinity();
    for (auto const &op : m.phi().ops())
      for (Complex d : op.diag()) r.min_distance = std::min(r.min_distance, std::abs(lambda - d));
    // max_x,i 1/|lambda - phi_i(x)| is attained at the nearest entry
    r.sup = r.min_distance > pole_tol ? 1.0 / r.min_distance : std::numeric_limits<double>::infinity();
    return r;
  }

  std::string_view to_string(SpectralClass c) noexcept { return c == SpectralClass::spectrum ? "spectrum" : "resolvent_set"; }

  SpectrumReport spectrum_scan(MulOperator const &m, std::span<const Complex> grid, double threshold, double pole_tol) {
    if (!(threshold > 0.0)) throw std::invalid_argument("spectrum threshold must be positive");
    SpectrumReport report;
    report.threshold = threshold;
    report.pole_tol = pole_tol;
    report.entries.reserve(grid.size());
    for (Complex lambda : grid) {
      auto const r = resolvent_sup(m, lambda, pole_tol);
      bool const in_spectrum = r.min_distance <= pole_tol || r.sup >= threshold;
      report.entries.push_back({lambda, r.min_distance, r.sup, in_spectrum ? SpectralClass::spectrum : SpectralClass::resolvent_set});
    }
    return report;
  }

} // namespace mulsemi
