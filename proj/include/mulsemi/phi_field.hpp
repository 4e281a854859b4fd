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
 * @brief Symbols phi : Omega -> Z(E), sampled on a space model.
 */

#include "mulsemi/expr.hpp"
#include "mulsemi/lattice.hpp"
#include "mulsemi/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mulsemi {

  /// One parsed expression per diagonal slot of phi(x).
  class PhiSpec {
    public:
    /// Parses every entry; SyntaxError is forwarded unchanged.
    static PhiSpec parse(std::vector<std::string> const &entries);
    explicit PhiSpec(std::vector<Expr> exprs);

    [[nodiscard]] std::size_t dim() const noexcept { return exprs_.size(); }
    [[nodiscard]] std::vector<Expr> const &exprs() const noexcept { return exprs_; }

    /// Canonical text of each entry.
    [[nodiscard]] std::vector<std::string> texts() const;

    friend bool operator==(PhiSpec const &, PhiSpec const &) = default;

    private:
    std::vector<Expr> exprs_;
  };

  /// Symbol sampled on a space: one central operator per point.
  class PhiField {
    public:
    /// Throws DimensionMismatch unless there is one operator per point, all of the same dimension.
    PhiField(SpaceModel space, std::vector<CentralOperator> ops, std::optional<PhiSpec> source = std::nullopt);

    /// phi(x) = c I for every point.
    static PhiField constant(SpaceModel space, CentralOperator const &value);

    [[nodiscard]] SpaceModel const &space() const noexcept { return space_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] CentralOperator const &at(std::size_t p) const { return ops_.at(p); }
    [[nodiscard]] std::vector<CentralOperator> const &ops() const noexcept { return ops_; }
    [[nodiscard]] std::optional<PhiSpec> const &source() const noexcept { return source_; }

    /// max over points of central_op_norm.
    [[nodiscard]] double sampled_sup_norm() const;

    friend bool operator==(PhiField const &a, PhiField const &b) { return a.space_ == b.space_ && a.ops_ == b.ops_; }

    private:
    SpaceModel space_;
    std::vector<CentralOperator> ops_;
    std::size_t dim_;
    std::optional<PhiSpec> source_;
  };

  /// Evaluates each entry at every point coordinate. EvalError is rethrown tagged with point and entry.
  [[nodiscard]] PhiField build_phi(PhiSpec const &spec, SpaceModel const &space);

  /// Section whose coordinate i is the expression entries[i] evaluated at each point.
  [[nodiscard]] Section build_section(PhiSpec const &entries, SpaceModel const &space, NormSpec const &norm_spec);

} // namespace mulsemi
