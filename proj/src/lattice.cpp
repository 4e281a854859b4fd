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

#include "mulsemi/lattice.hpp"

#include "mulsemi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mulsemi {

  NormSpec NormSpec::p_norm(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p-norm requires finite p >= 1, got " + std::to_string(p));
    return NormSpec(Kind::p, p, {});
  }

  NormSpec NormSpec::weighted_sup(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("weighted_sup requires at least one weight");
    for (double w : weights)
      if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weighted_sup weights must be finite and strictly positive");
    return NormSpec(Kind::weighted_sup, 0.0, std::move(weights));
  }

  void NormSpec::check_dimension(std::size_t n) const {
    if (kind_ == Kind::weighted_sup && weights_.size() != n)
      throw DimensionMismatch("weighted_sup norm has " + std::to_string(weights_.size()) + " weights but the vector has dimension "
                              + std::to_string(n));
  }

  double NormSpec::evaluate_moduli(std::span<const double> moduli) const {
    switch (kind_) {
      case Kind::sup: {
        double m = 0.0;
        for (double a : moduli) m = std::max(m, a);
        return m;
      }
      case Kind::p: {
        if (p_ == 1.0) {
          double sum = 0.0;
          for (double a : moduli) sum += a;
          return sum;
        }
        // scale by the largest modulus to avoid overflow in a^p
        double scale = 0.0;
        for (double a : moduli) scale = std::max(scale, a);
        if (scale == 0.0 || !std::isfinite(scale)) return scale;
        double sum = 0.0;
        for (double a : moduli) sum += std::pow(a / scale, p_);
        return scale * std::pow(sum, 1.0 / p_);
      }
      case Kind::weighted_sup: {
        check_dimension(moduli.size());
        double m = 0.0;
        for (std::size_t i = 0; i < moduli.size(); ++i) m = std::max(m, weights_[i] * moduli[i]);
        return m;
      }
    }
    return 0.0;
  }

  double NormSpec::evaluate(std::span<const Complex> coords) const {
    std::vector<double> moduli(coords.size());
    std::transform(coords.begin(), coords.end(), moduli.begin(), [](Complex z) { return std::abs(z); });
    return evaluate_moduli(moduli);
  }

  // ---------------------------------------------------------------------------

  LatticeVector::LatticeVector(std::vector<Complex> coords, NormSpec norm_spec)
     : coords_(std::move(coords)), norm_spec_(std::move(norm_spec)) {
    norm_spec_.check_dimension(coords_.size());
  }

  LatticeVector LatticeVector::zero(std::size_t n, NormSpec norm_spec) { return {std::vector<Complex>(n), std::move(norm_spec)}; }

  LatticeVector LatticeVector::unit_coordinate(std::size_t n, std::size_t i, NormSpec norm_spec) {
    if (i >= n) throw std::out_of_range("coordinate index out of range");
    std::vector<Complex> c(n);
    c[i] = 1.0;
    if (norm_spec.kind() == NormSpec::Kind::weighted_sup) c[i] = 1.0 / norm_spec.weights().at(i);
    return {std::move(c), std::move(norm_spec)};
  }

  namespace {
    void require_combinable(LatticeVector const &a, LatticeVector const &b) {
      if (!a.combinable(b))
        throw DimensionMismatch("lattice vectors of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim())
                                + " (or with different norms) cannot be combined");
    }
  } // namespace

  LatticeVector &LatticeVector::operator+=(LatticeVector const &other) {
    require_combinable(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
  }

  LatticeVector &LatticeVector::operator-=(LatticeVector const &other) {
    require_combinable(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
  }

  LatticeVector &LatticeVector::operator*=(Complex alpha) {
    for (auto &c : coords_) c *= alpha;
    return *this;
  }

  LatticeVector modulus(LatticeVector const &v) {
    std::vector<Complex> m(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) m[i] = std::abs(v[i]);
    return {std::move(m), v.norm_spec()};
  }

  double vec_norm(LatticeVector const &v) { return v.norm_spec().evaluate(v.coords()); }

  // ---------------------------------------------------------------------------

  namespace {
    void require_same_dim(std::size_t a, std::size_t b) {
      if (a != b) throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
  } // namespace

  CentralOperator operator+(CentralOperator const &a, CentralOperator const &b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<Complex> d(a.dim());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.diag_[i] + b.diag_[i];
    return CentralOperator(std::move(d));
  }

  CentralOperator operator-(CentralOperator const &a, CentralOperator const &b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<Complex> d(a.dim());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.diag_[i] - b.diag_[i];
    return CentralOperator(std::move(d));
  }

  CentralOperator operator*(CentralOperator const &a, CentralOperator const &b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<Complex> d(a.dim());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.diag_[i] * b.diag_[i];
    return CentralOperator(std::move(d));
  }

  CentralOperator operator*(Complex alpha, CentralOperator const &a) {
    std::vector<Complex> d(a.diag_);
    for (auto &x : d) x *= alpha;
    return CentralOperator(std::move(d));
  }

  LatticeVector apply_central(CentralOperator const &op, LatticeVector const &v) {
    require_same_dim(op.dim(), v.dim());
    std::vector<Complex> out(v.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op[i] * v[i];
    return {std::move(out), v.norm_spec()};
  }

  double central_op_norm(CentralOperator const &op) {
    double m = 0.0;
    for (Complex d : op.diag()) m = std::max(m, std::abs(d));
    return m;
  }

  CentralOperator central_exp(CentralOperator const &op) {
    std::vector<Complex> d(op.dim());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::exp(op[i]);
    return CentralOperator(std::move(d));
  }

  CentralOperator central_inverse(CentralOperator const &op, double tol) {
    std::vector<Complex> d(op.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
      double const m = std::abs(op[i]);
      if (m <= tol)
        throw NotInvertible("diagonal entry " + std::to_string(i) + " has modulus " + std::to_string(m) + " <= tol", std::nullopt, i, m);
      d[i] = 1.0 / op[i];
    }
    return CentralOperator(std::move(d));
  }

  CentralOperator resolvent_central(CentralOperator const &op, Complex lambda, double tol) {
    std::vector<Complex> d(op.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
      Complex const gap = lambda - op[i];
      if (std::abs(gap) <= tol) throw LambdaInPointSpectrum("lambda lies within tol of diagonal entry " + std::to_string(i), i);
      d[i] = 1.0 / gap;
    }
    return CentralOperator(std::move(d));
  }

} // namespace mulsemi
