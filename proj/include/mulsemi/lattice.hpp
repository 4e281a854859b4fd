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
 * @brief The finite-dimensional complex Banach lattice E = C^n and its centre Z(E).
 *
 * E carries the coordinatewise order, so the lattice modulus is the coordinatewise complex
 * modulus and the centre consists exactly of the complex diagonal operators.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mulsemi {

  using Complex = std::complex<double>;

  /// Default absolute tolerance for zero detection of diagonal entries.
  inline constexpr double default_pole_tol = 1e-12;

  /// One of the absolute, monotone lattice norms on C^n.
  class NormSpec {
    public:
    enum class Kind { sup, p, weighted_sup };

    /// max_i |v_i|
    static NormSpec sup() { return NormSpec(Kind::sup, 0.0, {}); }

    /// (sum_i |v_i|^p)^(1/p), p >= 1.
    static NormSpec p_norm(double p);

    /// max_i w_i |v_i| with strictly positive weights.
    static NormSpec weighted_sup(std::vector<double> weights);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] std::vector<double> const &weights() const noexcept { return weights_; }

    /// Throws DimensionMismatch when a weighted norm is used on a space of a different dimension.
    void check_dimension(std::size_t n) const;

    /// Norm of a vector given by its coordinatewise moduli.
    [[nodiscard]] double evaluate_moduli(std::span<const double> moduli) const;

    /// Norm of a complex coordinate vector.
    [[nodiscard]] double evaluate(std::span<const Complex> coords) const;

    friend bool operator==(NormSpec const &, NormSpec const &) = default;

    private:
    NormSpec(Kind kind, double p, std::vector<double> weights) : kind_(kind), p_(p), weights_(std::move(weights)) {}

    Kind kind_;
    double p_;
    std::vector<double> weights_;
  };

  /// An element of E: complex coordinates together with the norm of E.
  class LatticeVector {
    public:
    LatticeVector(std::vector<Complex> coords, NormSpec norm_spec);

    static LatticeVector zero(std::size_t n, NormSpec norm_spec);

    /// e_i scaled to unit norm.
    static LatticeVector unit_coordinate(std::size_t n, std::size_t i, NormSpec norm_spec);

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
    [[nodiscard]] std::span<const Complex> coords() const noexcept { return coords_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] NormSpec const &norm_spec() const noexcept { return norm_spec_; }

    /// True when dimension and norm agree, so that the two vectors may be combined.
    [[nodiscard]] bool combinable(LatticeVector const &other) const noexcept {
      return dim() == other.dim() && norm_spec_ == other.norm_spec_;
    }

    LatticeVector &operator+=(LatticeVector const &other);
    LatticeVector &operator-=(LatticeVector const &other);
    LatticeVector &operator*=(Complex alpha);

    friend LatticeVector operator+(LatticeVector a, LatticeVector const &b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, LatticeVector const &b) { return a -= b; }
    friend LatticeVector operator*(Complex alpha, LatticeVector v) { return v *= alpha; }

    friend bool operator==(LatticeVector const &, LatticeVector const &) = default;

    private:
    std::vector<Complex> coords_;
    NormSpec norm_spec_;
  };

  /// |v|: coordinatewise complex modulus, same norm.
  [[nodiscard]] LatticeVector modulus(LatticeVector const &v);

  [[nodiscard]] double vec_norm(LatticeVector const &v);

  /// Element of the centre Z(E): a complex diagonal operator acting coordinatewise.
  class CentralOperator {
    public:
    explicit CentralOperator(std::vector<Complex> diag) : diag_(std::move(diag)) {}

    static CentralOperator identity(std::size_t n) { return CentralOperator(std::vector<Complex>(n, Complex{1.0, 0.0})); }
    static CentralOperator zero(std::size_t n) { return CentralOperator(std::vector<Complex>(n, Complex{})); }
    static CentralOperator scalar(std::size_t n, Complex c) { return CentralOperator(std::vector<Complex>(n, c)); }

    [[nodiscard]] std::size_t dim() const noexcept { return diag_.size(); }
    [[nodiscard]] std::span<const Complex> diag() const noexcept { return diag_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return diag_[i]; }

    friend CentralOperator operator+(CentralOperator const &a, CentralOperator const &b);
    friend CentralOperator operator-(CentralOperator const &a, CentralOperator const &b);
    /// Composition; diagonal operators commute.
    friend CentralOperator operator*(CentralOperator const &a, CentralOperator const &b);
    friend CentralOperator operator*(Complex alpha, CentralOperator const &a);

    friend bool operator==(CentralOperator const &, CentralOperator const &) = default;

    private:
    std::vector<Complex> diag_;
  };

  /// (Tv)_i = diag_i v_i. Throws DimensionMismatch.
  [[nodiscard]] LatticeVector apply_central(CentralOperator const &op, LatticeVector const &v);

  /// Operator norm on E, max_i |diag_i|, exact for each supported NormSpec.
  [[nodiscard]] double central_op_norm(CentralOperator const &op);

  /// Entrywise complex exponential.
  [[nodiscard]] CentralOperator central_exp(CentralOperator const &op);

  /// Entrywise reciprocal. Throws NotInvertible if some |diag_i| <= tol.
  [[nodiscard]] CentralOperator central_inverse(CentralOperator const &op, double tol = default_pole_tol);

  /**
   * @brief Resolvent R(lambda, T) = (lambda - T)^{-1}, computed entrywise.
   *
   * Throws LambdaInPointSpectrum if |lambda - diag_i| <= tol for some i. The norm of the
   * result is max_i 1 / |lambda - diag_i|.
   */
  [[nodiscard]] CentralOperator resolvent_central(CentralOperator const &op, Complex lambda, double tol = default_pole_tol);

} // namespace mulsemi
