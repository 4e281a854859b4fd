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

#include "mulsemi/errors.hpp"
#include "mulsemi/space.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace mulsemi;
using namespace std::complex_literals;

namespace {

  Section scalar_section(SpaceModel const &space, NormSpec const &norm, auto f) {
    std::vector<Complex> flat;
    for (std::size_t p = 0; p < space.size(); ++p) {
      flat.push_back(f(space.coordinate(p)));
      flat.push_back(0.0);
    }
    return Section(space, 2, norm, std::move(flat));
  }

  Section random_section(oracles::Rng &rng, SpaceModel const &space, std::size_t n, NormSpec const &norm) {
    std::vector<Complex> flat(space.size() * n);
    for (auto &z : flat) z = oracles::random_complex(rng, 10.0);
    return Section(space, n, norm, std::move(flat));
  }

}  // namespace

TEST_CASE("space models") {
  auto f = SpaceModel::finite(3);
  CHECK(f.size() == 3);
  CHECK(f.coordinate(0) == 1.0);
  CHECK(f.label(2) == "3");
  CHECK_FALSE(f.has_unbounded_direction());
  auto labelled = SpaceModel::finite(2, {"left", "right"});
  CHECK(labelled.label(1) == "right");
  CHECK_THROWS_AS(SpaceModel::finite(0), std::invalid_argument);
  CHECK_THROWS_AS(SpaceModel::finite(2, {"a"}), std::invalid_argument);

  auto n = SpaceModel::truncated_naturals(1000);
  CHECK(n.size() == 1000);
  CHECK(n.coordinate(0) == 1.0);
  CHECK(n.coordinate(999) == 1000.0);
  CHECK(n.has_unbounded_direction());
  CHECK_THROWS_AS(SpaceModel::truncated_naturals(0), std::invalid_argument);

  auto g = SpaceModel::interval_grid(0.0, 10.0, 0.1);
  CHECK(g.size() == 101);
  CHECK(g.coordinate(100) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK_FALSE(g.has_unbounded_direction());
  CHECK(SpaceModel::interval_grid(0.0, 10.0, 0.1, true).has_unbounded_direction());
  CHECK(SpaceModel::interval_grid(0.0, 1.0, 0.3).size() == 4);
  CHECK_THROWS_AS(SpaceModel::interval_grid(1.0, 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(SpaceModel::interval_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpaceModel::interval_grid(0.0, 1.0, -0.5), std::invalid_argument);
}

TEST_CASE("section_norm") {
  auto sup = NormSpec::sup();
  auto n = SpaceModel::truncated_naturals(100);
  CHECK(section_norm(Section::zero(n, 2, sup)) == 0.0);
  CHECK(section_norm(scalar_section(n, sup, [](double x) { return Complex{1.0 / x}; })) == 1.0);

  auto f = SpaceModel::finite(3);
  Section s(f, 1, sup, {2.0, -5i, 1.0});
  CHECK(section_norm(s) == 5.0);

  CHECK_THROWS_AS(Section(f, 1, sup, {1.0, 2.0}), DimensionMismatch);
  CHECK_THROWS_AS(Section(f, std::vector<LatticeVector>{LatticeVector({1.0}, sup), LatticeVector({1.0, 2.0}, sup),
                                                        LatticeVector({1.0}, sup)}),
                  DimensionMismatch);
}

TEST_CASE("vanishing_check") {
  auto sup = NormSpec::sup();
  auto n = SpaceModel::truncated_naturals(1000);
  auto decay = scalar_section(n, sup, [](double x) { return Complex{1.0 / (x * x)}; });
  auto r = vanishing_check(decay, 1e-3);
  CHECK(r.vanishes);
  CHECK(r.tail_first == 900);
  CHECK(r.tail_sup == 1.0 / (901.0 * 901.0));

  auto constant = scalar_section(n, sup, [](double) { return Complex{1.0}; });
  auto c = vanishing_check(constant, 0.5);
  CHECK_FALSE(c.vanishes);
  CHECK(c.tail_sup == 1.0);

  auto f = SpaceModel::finite(5);
  CHECK(vanishing_check(Section(f, 1, sup, {1.0, 1e9, 3.0, 4.0, 5.0}), 1e-12).vanishes);

  auto small = SpaceModel::truncated_naturals(15);
  CHECK(vanishing_check(scalar_section(small, sup, [](double) { return Complex{1.0}; }), 0.5).tail_first == 13);
}

TEST_CASE("compactly supported sections vanish") {
  oracles::Rng rng(21);
  auto n = SpaceModel::truncated_naturals(200);
  for (int k = 0; k < 50; ++k) {
    auto s = random_section(rng, n, 2, NormSpec::sup());
    std::size_t first = oracles::uniform_index(rng, 0, 199);
    std::size_t last = oracles::uniform_index(rng, first + 1, 200);
    auto c = s.restricted_to({first, last});
    REQUIRE(c.support().has_value());
    for (std::size_t p = 0; p < n.size(); ++p)
      if (p < first || p >= last)
        for (auto z : c.point_values(p)) CHECK(z == Complex{});
    for (double eps : {1e-300, 1e-12, 1.0}) CHECK(vanishing_check(c, eps).vanishes);
  }
}

TEST_CASE("section_norm is a norm") {
  oracles::Rng rng(22);
  auto space = SpaceModel::interval_grid(0.0, 3.0, 0.25, true);
  for (int k = 0; k < 200; ++k) {
    std::size_t dim = oracles::uniform_index(rng, 1, 4);
    auto norm = oracles::random_norm(rng, dim, k);
    auto a = random_section(rng, space, dim, norm);
    auto b = random_section(rng, space, dim, norm);
    Complex alpha = oracles::random_complex(rng, 5.0);
    CHECK(section_norm(a + b) <= (section_norm(a) + section_norm(b)) * (1.0 + 1e-13));
    CHECK(std::abs(section_norm(alpha * a) - std::abs(alpha) * section_norm(a)) <= 1e-13 * std::abs(alpha) * section_norm(a));
    CHECK(section_norm(a) > 0.0);
  }
}

TEST_CASE("tensor_section") {
  auto sup = NormSpec::sup();
  auto n = SpaceModel::truncated_naturals(100);
  auto peak = peak_function(n, 17);
  CHECK(section_norm(tensor_section(n, peak, LatticeVector({0.6, 1i}, sup))) == 1.0);
  std::vector<double> zero(n.size(), 0.0);
  CHECK(tensor_section(n, zero, LatticeVector({1.0, 2.0}, sup)) == Section::zero(n, 2, sup));
  std::vector<double> inv(n.size());
  for (std::size_t p = 0; p < n.size(); ++p) inv[p] = 1.0 / n.coordinate(p);
  CHECK(section_norm(tensor_section(n, inv, LatticeVector({1.0, 1.0}, sup))) == 1.0);
  CHECK_THROWS_AS((void)tensor_section(n, std::vector<double>(3, 1.0), LatticeVector({1.0}, sup)), DimensionMismatch);

  oracles::Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    std::size_t dim = oracles::uniform_index(rng, 1, 4);
    auto norm = oracles::random_norm(rng, dim, k);
    std::vector<Complex> zc(dim);
    for (auto &z : zc) z = oracles::random_complex(rng, 3.0);
    LatticeVector z(zc, norm);
    std::vector<double> f(n.size());
    double fmax = 0.0;
    for (auto &v : f) {
      v = oracles::uniform(rng, -2.0, 2.0);
      fmax = std::max(fmax, std::abs(v));
    }
    CHECK(section_norm(tensor_section(n, f, z)) == doctest::Approx(fmax * vec_norm(z)).epsilon(1e-15));
  }
}
