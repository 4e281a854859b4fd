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

#include "mulsemi/phi_field.hpp"

#include "mulsemi/errors.hpp"

#include <algorithm>

namespace mulsemi {

  PhiSpec PhiSpec::parse(std::vector<std::string> const &entries) {
    std::vector<Expr> exprs;
    exprs.reserve(entries.size());
    for (auto const &text : entries) exprs.push_back(mulsemi::parse(text));
    return PhiSpec(std::move(exprs));
  }

  PhiSpec::PhiSpec(std::vector<Expr> exprs) : exprs_(std::move(exprs)) {
    if (exprs_.empty()) throw std::invalid_argument("a symbol needs at least one diagonal entry");
  }

  std::vector<std::string> PhiSpec::texts() const {
    std::vector<std::string> out;
    for (auto const &e : exprs_) out.push_back(to_string(e));
    return out;
  }

  PhiField::PhiField(SpaceModel space, std::vector<CentralOperator> ops, std::optional<PhiSpec> source)
     : space_(std::move(space)), ops_(std::move(ops)), dim_(ops_.empty() ? 0 : ops_.front().dim()), source_(std::move(source)) {
    if (ops_.size() != space_.size())
      throw DimensionMismatch("symbol has " + std::to_string(ops_.size()) + " operators for " + std::to_string(space_.size()) + " points");
    for (auto const &op : ops_)
      if (op.dim() != dim_) throw DimensionMismatch("symbol operators must share one dimension");
    if (source_ && source_->dim() != dim_) throw DimensionMismatch("symbol source has a different number of entries");
  }

  PhiField PhiField::constant(SpaceModel space, CentralOperator const &value) {
    std::vector<CentralOperator> ops(space.size(), value);
    return {std::move(space), std::move(ops)};
  }

  double PhiField::sampled_sup_norm() const {
    double m = 0.0;
    for (auto const &op : ops_) m = std::max(m, central_op_norm(op));
    return m;
  }

  namespace {
    std::vector<Complex> evaluate_entry(Expr const &e, std::size_t entry, SpaceModel const &space) {
      std::vector<Complex> out(space.size());
      for (std::size_t p = 0; p < space.size(); ++p) {
        try {
          out[p] = eval(e, Complex{space.coordinate(p), 0.0});
        } catch (EvalError &err) {
          err.tag_location(p, entry);
          throw;
        }
      }
      return out;
    }
  } // namespace

  PhiField build_phi(PhiSpec const &spec, SpaceModel const &space) {
    std::vector<std::vector<Complex>> diags(space.size(), std::vector<Complex>(spec.dim()));
    for (std::size_t i = 0; i < spec.dim(); ++i) {
      auto values = evaluate_entry(spec.exprs()[i], i, space);
      for (std::size_t p = 0; p < space.size(); ++p) diags[p][i] = values[p];
    }
    std::vector<CentralOperator> ops;
    ops.reserve(space.size());
    for (auto &d : diags) ops.emplace_back(std::move(d));
    return {space, std::move(ops), spec};
  }

  Section build_section(PhiSpec const &entries, SpaceModel const &space, NormSpec const &norm_spec) {
    std::size_t const n = entries.dim();
    std::vector<Complex> values(space.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      auto column = evaluate_entry(entries.exprs()[i], i, space);
      for (std::size_t p = 0; p < space.size(); ++p) values[p * n + i] = column[p];
    }
    return {space, n, norm_spec, std::move(values)};
  }

} // namespace mulsemi
