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
 * @brief Spectrum of a finite multiplication operator via a dense eigensolver.
 *
 * The block-diagonal matrix of M_phi is conjugated by a random unitary before solving, so the
 * eigenvalues are computed rather than read off the diagonal.
 */

#include "mulsemi/mulop.hpp"
#include "oracles.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <limits>
#include <vector>

namespace oracles {

  inline std::vector<Complex> dense_eigenvalues(mulsemi::PhiField const &phi, Rng &rng) {
    auto const size = static_cast<Eigen::Index>(phi.size() * phi.dim());
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(size, size);
    for (std::size_t p = 0; p < phi.size(); ++p)
      for (std::size_t i = 0; i < phi.dim(); ++i) {
        auto k = static_cast<Eigen::Index>(p * phi.dim() + i);
        d(k, k) = phi.at(p)[i];
      }
    Eigen::MatrixXcd g(size, size);
    for (Eigen::Index r = 0; r < size; ++r)
      for (Eigen::Index c = 0; c < size; ++c) g(r, c) = Complex{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    Eigen::MatrixXcd a = q * d * q.adjoint();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
    std::vector<Complex> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
    return out;
  }

  inline double distance_to_set(Complex lambda, std::vector<Complex> const &set) {
    double d = std::numeric_limits<double>::infinity();
    for (auto z : set) d = std::min(d, std::abs(lambda - z));
    return d;
  }

  /// Classification from eigenvalue distances: spectrum within pole_tol or where 1/d reaches the threshold.
  inline mulsemi::SpectralClass classify_by_eigenvalues(Complex lambda, std::vector<Complex> const &eig, double threshold,
                                                        double pole_tol) {
    double d = distance_to_set(lambda, eig);
    return d <= pole_tol || 1.0 / d >= threshold ? mulsemi::SpectralClass::spectrum : mulsemi::SpectralClass::resolvent_set;
  }

}  // namespace oracles
