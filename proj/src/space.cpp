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

#include "mulsemi/space.hpp"

#include "mulsemi/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace mulsemi {

  SpaceModel SpaceModel::finite(std::size_t m, std::vector<std::string> labels) {
    if (m == 0) throw std::invalid_argument("finite space needs at least one point");
    if (labels.empty())
      for (std::size_t i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
    if (labels.size() != m) throw std::invalid_argument("finite space: expected " + std::to_string(m) + " labels");
    SpaceModel s;
    s.kind_ = Kind::finite;
    s.labels_ = std::move(labels);
    for (std::size_t i = 1; i <= m; ++i) s.coords_.push_back(static_cast<double>(i));
    return s;
  }

  SpaceModel SpaceModel::truncated_naturals(std::size_t n) {
    if (n == 0) throw std::invalid_argument("truncated naturals need N >= 1");
    SpaceModel s;
    s.kind_ = Kind::truncated_naturals;
    s.unbounded_ = true;
    for (std::size_t i = 1; i <= n; ++i) s.coords_.push_back(static_cast<double>(i));
    return s;
  }

  SpaceModel SpaceModel::interval_grid(double a, double b, double step, bool unbounded) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) throw std::invalid_argument("interval grid needs finite a < b");
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("interval grid needs a positive step");
    // points a + k*step <= b, with slack for b landing on the grid up to rounding
    auto const count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    SpaceModel s;
    s.kind_ = Kind::interval_grid;
    s.a_ = a;
    s.b_ = b;
    s.step_ = step;
    s.unbounded_ = unbounded;
    s.coords_.reserve(count);
    for (std::size_t k = 0; k < count; ++k) s.coords_.push_back(a + static_cast<double>(k) * step);
    return s;
  }

  std::string SpaceModel::label(std::size_t i) const {
    if (kind_ == Kind::finite) return labels_.at(i);
    double const x = coords_.at(i);
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
  }

  // ---------------------------------------------------------------------------

  Section::Section(SpaceModel space, std::vector<LatticeVector> const &values)
     : space_(std::move(space)), dim_(values.empty() ? 0 : values.front().dim()),
       norm_spec_(values.empty() ? NormSpec::sup() : values.front().norm_spec()) {
    if (values.size() != space_.size())
      throw DimensionMismatch("section has " + std::to_string(values.size()) + " values for " + std::to_string(space_.size()) + " points");
    values_.reserve(values.size() * dim_);
    for (auto const &v : values) {
      if (!v.combinable(values.front())) throw DimensionMismatch("section values must share dimension and norm");
      values_.insert(values_.end(), v.coords().begin(), v.coords().end());
    }
  }

  Section::Section(SpaceModel space, std::size_t dim, NormSpec norm_spec, std::vector<Complex> values)
     : space_(std::move(space)), dim_(dim), norm_spec_(std::move(norm_spec)), values_(std::move(values)) {
    norm_spec_.check_dimension(dim_);
    if (values_.size() != space_.size() * dim_)
      throw DimensionMismatch("section needs " + std::to_string(space_.size() * dim_) + " values, got " + std::to_string(values_.size()));
  }

  Section Section::zero(SpaceModel space, std::size_t dim, NormSpec norm_spec) {
    std::size_t const n = space.size() * dim;
    return {std::move(space), dim, std::move(norm_spec), std::vector<Complex>(n)};
  }

  LatticeVector Section::at(std::size_t p) const {
    auto v = point_values(p);
    return {std::vector<Complex>(v.begin(), v.end()), norm_spec_};
  }

  Section Section::restricted_to(SupportWindow window) const {
    if (window.first > window.last || window.last > size()) throw std::out_of_range("support window outside the point range");
    Section out = *this;
    for (std::size_t p = 0; p < size(); ++p)
      if (p < window.first || p >= window.last) std::ranges::fill(out.point_values(p), Complex{});
    out.support_ = window;
    return out;
  }

  namespace {
    void require_combinable(Section const &a, Section const &b) {
      if (!a.combinable(b)) throw DimensionMismatch("sections live on different spaces, dimensions or norms");
    }

    std::optional<SupportWindow> merge(std::optional<SupportWindow> const &a, std::optional<SupportWindow> const &b) {
      if (!a || !b) return std::nullopt;
      return SupportWindow{std::min(a->first, b->first), std::max(a->last, b->last)};
    }
  } // namespace

  Section &Section::operator+=(Section const &other) {
    require_combinable(*this, other);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
    support_ = merge(support_, other.support_);
    return *this;
  }

  Section &Section::operator-=(Section const &other) {
    require_combinable(*this, other);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
    support_ = merge(support_, other.support_);
    return *this;
  }

  Section &Section::operator*=(Complex alpha) {
    for (auto &v : values_) v *= alpha;
    return *this;
  }

  double section_norm(Section const &s) {
    double m = 0.0;
    for (std::size_t p = 0; p < s.size(); ++p) m = std::max(m, s.norm_spec().evaluate(s.point_values(p)));
    return m;
  }

  VanishingReport vanishing_check(Section const &s, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("vanishing_check requires eps > 0");
    VanishingReport r;
    r.tail_first = s.size();
    if (!s.space().has_unbounded_direction()) return r;

    auto const tail = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(vanishing_tail_fraction * static_cast<double>(s.size()))));
    r.tail_first = s.size() - std::min(tail, s.size());
    for (std::size_t p = r.tail_first; p < s.size(); ++p) r.tail_sup = std::max(r.tail_sup, s.norm_spec().evaluate(s.point_values(p)));
    // a declared compact support vanishes at infinity whatever the truncation shows
    r.vanishes = s.support().has_value() || r.tail_sup <= eps;
    return r;
  }

  Section tensor_section(SpaceModel const &space, std::span<const Complex> f, LatticeVector const &z) {
    if (f.size() != space.size()) throw DimensionMismatch("tensor_section: scalar factor has the wrong number of points");
    std::vector<Complex> values;
    values.reserve(space.size() * z.dim());
    for (Complex fx : f) {
      if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) throw std::invalid_argument("tensor_section: non-finite scalar factor");
      for (Complex zi : z.coords()) values.push_back(fx * zi);
    }
    return {space, z.dim(), z.norm_spec(), std::move(values)};
  }

  Section tensor_section(SpaceModel const &space, std::span<const double> f, LatticeVector const &z) {
    std::vector<Complex> fc(f.begin(), f.end());
    return tensor_section(space, fc, z);
  }

  std::vector<double> peak_function(SpaceModel const &space, std::size_t peak) {
    if (peak >= space.size()) throw std::out_of_range("peak point out of range");
    std::vector<double> f(space.size(), 0.0);
    f[peak] = 1.0;
    return f;
  }

} // namespace mulsemi
