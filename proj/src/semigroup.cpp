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

#include "mulsemi/semigroup.hpp"

#include "mulsemi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mulsemi {

  namespace {
    void require_nonnegative_time(double t) {
      if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("semigroup time must be finite and >= 0");
    }

    double identity_distance(CentralOperator const &e) {
      double m = 0.0;
      for (Complex d : e.diag()) m = std::max(m, std::abs(d - 1.0));
      return m;
    }
  } // namespace

  SemigroupEvaluator::SemigroupEvaluator(MulOperator m) : m_(std::move(m)), w_(-std::numeric_limits<double>::infinity()) {
    re_max_.reserve(m_.phi().size());
    for (auto const &op : m_.phi().ops()) {
      double r = -std::numeric_limits<double>::infinity();
      for (Complex d : op.diag()) r = std::max(r, d.real());
      re_max_.push_back(r);
      w_ = std::max(w_, r);
    }
  }

  CentralOperator SemigroupEvaluator::multiplier(std::size_t p, double t) const {
    return central_exp(Complex{t, 0.0} * m_.phi().at(p));
  }

  PhiField SemigroupEvaluator::multiplier_field(double t) const {
    require_nonnegative_time(t);
    std::vector<CentralOperator> ops;
    ops.reserve(m_.phi().size());
    for (std::size_t p = 0; p < m_.phi().size(); ++p) ops.push_back(multiplier(p, t));
    return {m_.space(), std::move(ops)};
  }

  Section evolve(SemigroupEvaluator const &sg, Section const &s, double t) {
    require_nonnegative_time(t);
    if (t == 0.0) {
      if (!(s.space() == sg.op().space()) || s.dim() != sg.op().dim()) throw DimensionMismatch("section does not match the semigroup");
      return s;
    }
    return apply_mulop(MulOperator(sg.multiplier_field(t), sg.op().domain_tolerance()), s);
  }

  double semigroup_norm(SemigroupEvaluator const &sg, double t) {
    require_nonnegative_time(t);
    if (t == 0.0) return 1.0;
    return std::exp(t * sg.growth_bound().w);
  }

  T0Report check_t0_condition(SemigroupEvaluator const &sg, double t0) {
    if (!(t0 > 0.0 && t0 <= 1.0)) throw std::invalid_argument("t0 must lie in (0, 1]");
    T0Report r;
    r.value = semigroup_norm(sg, t0);
    r.finite = std::isfinite(r.value);
    if (sg.op().space().has_unbounded_direction()) {
      std::vector<double> profile;
      profile.reserve(sg.real_part_bounds().size());
      for (double re : sg.real_part_bounds()) profile.push_back(std::exp(t0 * re));
      r.growth_flag = classify_growth(profile);
    }
    return r;
  }

  double check_semigroup_law(SemigroupEvaluator const &sg, Section const &s, double t1, double t2) {
    Section const joint = evolve(sg, s, t1 + t2);
    Section const composed = evolve(sg, evolve(sg, s, t2), t1);
    return section_norm(joint - composed);
  }

  DiffQuotientReport generator_diff_quotient(SemigroupEvaluator const &sg, Section const &s, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("difference quotient step must be positive");
    if (!in_domain(sg.op(), s).member) throw std::invalid_argument("section is not in the domain of the generator");
    Section quotient = evolve(sg, s, h) - s;
    quotient *= Complex{1.0 / h, 0.0};
    double const error = section_norm(quotient - apply_mulop(sg.op(), s));
    return {std::move(quotient), error};
  }

  std::optional<ContinuityWitness> uniform_continuity_witness(SemigroupEvaluator const &sg) {
    auto const &phi = sg.phi();
    std::vector<double> norms(phi.size());
    for (std::size_t p = 0; p < phi.size(); ++p) norms[p] = central_op_norm(phi.at(p));

    std::vector<std::size_t> order(phi.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

    ContinuityWitness w;
    bool obstruction = false;
    for (std::size_t p : order) {
      if (w.points.size() == witness_max_points || norms[p] == 0.0) break;
      double const t = 1.0 / norms[p];
      double const bound = identity_distance(sg.multiplier(p, t));
      w.points.push_back({p, t, bound});
      obstruction = obstruction || bound >= witness_obstruction_cutoff;
    }
    if (!obstruction) return std::nullopt;

    w.delta = std::ranges::min(w.points, {}, &WitnessPoint::lower_bound).lower_bound;
    auto const [lo, hi] = std::ranges::minmax(w.points, {}, &WitnessPoint::t);
    w.constant_t = hi.t - lo.t <= 1e-12 * hi.t;
    return w;
  }

  ContinuityReport continuity_profiles(SemigroupEvaluator const &sg, Section const &s, std::span<const double> t_grid) {
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
      if (!(t_grid[k] > 0.0)) throw std::invalid_argument("continuity t-grid must be positive");
      if (k > 0 && !(t_grid[k] > t_grid[k - 1])) throw std::invalid_argument("continuity t-grid must be strictly increasing");
    }
    ContinuityReport r;
    r.t_grid.assign(t_grid.begin(), t_grid.end());
    for (double t : t_grid) {
      r.strong_profile.push_back(section_norm(evolve(sg, s, t) - s));
      double u = 0.0;
      for (std::size_t p = 0; p < sg.phi().size(); ++p) u = std::max(u, identity_distance(sg.multiplier(p, t)));
      r.uniform_profile.push_back(u);
    }
    r.witness = uniform_continuity_witness(sg);
    return r;
  }

  // ---------------------------------------------------------------------------

  namespace {

    PhiField const *find_sample(std::map<double, PhiField> const &samples, double t) {
      auto it = samples.lower_bound(t * (1.0 - 1e-12));
      if (it != samples.end() && std::abs(it->first - t) <= 1e-12 * std::max(1.0, std::abs(t))) return &it->second;
      return nullptr;
    }

    void check_cocycle(std::map<double, PhiField> const &samples) {
      for (auto const &[t, mt] : samples) {
        for (auto const &[s, ms] : samples) {
          if (s < t) continue;
          PhiField const *joint = find_sample(samples, t + s);
          if (joint == nullptr) continue;
          for (std::size_t p = 0; p < joint->size(); ++p) {
            auto const &a = joint->at(p);
            auto const &b = mt.at(p);
            auto const &c = ms.at(p);
            for (std::size_t i = 0; i < a.dim(); ++i) {
              double const defect = std::abs(a[i] - b[i] * c[i]) / std::max(1.0, std::abs(a[i]));
              if (defect > cocycle_tolerance)
                throw CocycleViolation("sampled multipliers violate m(t+s) = m(t)m(s) at t = " + std::to_string(t) + ", s = "
                                          + std::to_string(s) + " (point " + std::to_string(p) + ", entry " + std::to_string(i) + ")",
                                       t, s, defect);
            }
          }
        }
      }
    }

    /// Value at 0 of the polynomial through (h_k, q_k), by Neville's scheme.
    Complex extrapolate_to_zero(std::span<const double> h, std::vector<Complex> q) {
      for (std::size_t level = 1; level < q.size(); ++level)
        for (std::size_t k = q.size() - 1; k >= level; --k) q[k] = q[k] + (q[k] - q[k - 1]) * (h[k] / (h[k - level] - h[k]));
      return q.back();
    }

  } // namespace

  PhiField recover_phi_from_semigroup(std::map<double, PhiField> const &samples, std::span<const double> h_seq) {
    if (h_seq.empty()) throw std::invalid_argument("recovery needs at least one step");
    std::vector<PhiField const *> fields;
    for (double h : h_seq) {
      if (!(h > 0.0)) throw std::invalid_argument("recovery steps must be positive");
      PhiField const *f = find_sample(samples, h);
      if (f == nullptr) throw std::invalid_argument("no sample for step h = " + std::to_string(h));
      fields.push_back(f);
    }
    for (std::size_t k = 1; k < h_seq.size(); ++k)
      for (std::size_t j = 0; j < k; ++j)
        if (h_seq[j] == h_seq[k]) throw std::invalid_argument("recovery steps must be distinct");
    auto const &reference = *fields.front();
    for (auto const &[t, f] : samples)
      if (!(f.space() == reference.space()) || f.dim() != reference.dim())
        throw DimensionMismatch("sampled multiplier fields must share space and dimension");

    check_cocycle(samples);

    std::size_t const finest = static_cast<std::size_t>(std::ranges::min_element(h_seq) - h_seq.begin());
    double const two_pi = 2.0 * std::numbers::pi;

    std::vector<CentralOperator> ops;
    ops.reserve(reference.size());
    std::vector<Complex> quotients(h_seq.size());
    for (std::size_t p = 0; p < reference.size(); ++p) {
      std::vector<Complex> diag(reference.dim());
      for (std::size_t i = 0; i < reference.dim(); ++i) {
        auto log_of = [&](std::size_t k) {
          Complex const m = fields[k]->at(p)[i];
          if (m == Complex{}) throw NotInvertible("sampled multiplier vanishes, its generator cannot be recovered", p, i, 0.0);
          return std::log(m);
        };
        Complex const base = log_of(finest) / h_seq[finest];
        for (std::size_t k = 0; k < h_seq.size(); ++k) {
          Complex l = log_of(k);
          // log(m_h) is only known modulo 2 pi i; pick the branch nearest h * (finest estimate)
          double const turns = std::round((h_seq[k] * base.imag() - l.imag()) / two_pi);
          l += Complex{0.0, two_pi * turns};
          quotients[k] = l / h_seq[k];
        }
        diag[i] = extrapolate_to_zero(h_seq, quotients);
      }
      ops.emplace_back(std::move(diag));
    }
    return {reference.space(), std::move(ops)};
  }

} // namespace mulsemi
