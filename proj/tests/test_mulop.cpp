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

#include "eigen_oracle.hpp"
#include "mulsemi/errors.hpp"
#include "mulsemi/mulop.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace mulsemi;
using namespace std::complex_literals;

namespace {

  MulOperator op(std::vector<std::string> const &entries, SpaceModel const &space) {
    return MulOperator(build_phi(PhiSpec::parse(entries), space));
  }

  MulOperator example_iii(std::size_t n) { return op({"i*x", "-x^2"}, SpaceModel::truncated_naturals(n)); }

  Section sec(std::vector<std::string> const &entries, SpaceModel const &space) {
    return build_section(PhiSpec::parse(entries), space, NormSpec::sup());
  }

  Section random_section(oracles::Rng &rng, SpaceModel const &space, std::size_t n) {
    std::vector<Complex> flat(space.size() * n);
    for (auto &z : flat) z = oracles::random_complex(rng, 5.0);
    return Section(space, n, NormSpec::sup(), std::move(flat));
  }

}  // namespace

TEST_CASE("apply_mulop") {
  auto m = example_iii(100);
  auto r = apply_mulop(m, sec({"1/x^2", "1/x^2"}, m.space()));
  for (std::size_t p = 0; p < 100; ++p) {
    double n = static_cast<double>(p + 1);
    CHECK(std::abs(r.point_values(p)[0] - Complex{0.0, 1.0 / n}) <= 1e-16);
    CHECK(std::abs(r.point_values(p)[1] - Complex{-1.0}) <= 1e-15);
  }
  auto s = sec({"exp(i*x)", "x"}, m.space());
  CHECK(apply_mulop(op({"1", "1"}, m.space()), s) == s);
  CHECK(apply_mulop(op({"0", "0"}, m.space()), s) == Section::zero(m.space(), 2, NormSpec::sup()));
  CHECK_THROWS_AS((void)apply_mulop(m, sec({"1"}, m.space())), DimensionMismatch);
  CHECK_THROWS_AS((void)apply_mulop(m, sec({"1", "1"}, SpaceModel::truncated_naturals(99))), DimensionMismatch);
}

TEST_CASE("linearity") {
  oracles::Rng rng(41);
  auto space = SpaceModel::finite(12);
  for (int k = 0; k < 100; ++k) {
    MulOperator m(oracles::random_finite_field(rng, 12, 3, 10.0));
    auto s = random_section(rng, space, 3), t = random_section(rng, space, 3);
    Complex alpha = oracles::random_complex(rng, 5.0);
    auto lhs = apply_mulop(m, alpha * s + t);
    auto rhs = alpha * apply_mulop(m, s) + apply_mulop(m, t);
    CHECK(section_norm(lhs - rhs) <= 1e-13 * std::max(1.0, section_norm(rhs)));
  }
}

TEST_CASE("in_domain") {
  auto space = SpaceModel::truncated_naturals(1000);
  auto m = op({"x"}, space);
  auto bad = in_domain(m, sec({"1/x"}, space), 1e-3);
  CHECK_FALSE(bad.member);
  CHECK(bad.evidence.tail_sup == doctest::Approx(1.0).epsilon(1e-15));
  auto good = in_domain(m, sec({"1/x^3"}, space), 1e-3);
  CHECK(good.member);
  CHECK(good.evidence.tail_sup == doctest::Approx(1.0 / (901.0 * 901.0)).epsilon(1e-12));

  auto bounded = op({"exp(i*x)/2"}, space);
  CHECK(in_domain(bounded, sec({"exp(-x)"}, space)).member);
  CHECK(in_domain(bounded, sec({"1/x"}, space), 1e-3).member);

  auto c = sec({"1"}, space).restricted_to({0, 50});
  CHECK(in_domain(m, c).member);
}

TEST_CASE("operator_norm") {
  CHECK(operator_norm(example_iii(10)) == 100.0);
  CHECK(operator_norm(op({"0", "0"}, SpaceModel::truncated_naturals(5))) == 0.0);
  CHECK(operator_norm(op({"i*x"}, SpaceModel::interval_grid(0.0, 5.0, 0.5))) == 5.0);
}

TEST_CASE("operator_norm matches sampled sections and is attained") {
  oracles::Rng rng(42);
  for (int k = 0; k < 10; ++k) {
    std::size_t m = oracles::uniform_index(rng, 1, 20), n = oracles::uniform_index(rng, 1, 4);
    auto phi = oracles::random_finite_field(rng, m, n, 10.0);
    MulOperator mo(phi);
    double formula = operator_norm(mo);
    auto arg = oracles::argmax_entry(phi);
    for (int kind = 0; kind < 3; ++kind) {
      auto norm = oracles::random_norm(rng, n, kind);
      double sampled = oracles::sampled_mulop_norm(rng, mo, norm, 1000);
      CHECK(sampled - formula <= 4 * std::numeric_limits<double>::epsilon() * formula);
      CHECK(sampled - formula >= -1e-9);
      auto s = tensor_section(phi.space(), peak_function(phi.space(), arg.point), LatticeVector::unit_coordinate(n, arg.entry, norm));
      CHECK(std::abs(section_norm(apply_mulop(mo, s)) / section_norm(s) - formula) <= 1e-9);
    }
  }
}

TEST_CASE("is_bounded") {
  auto grow = is_bounded(example_iii(100));
  CHECK(grow.growth_flag == GrowthFlag::increasing);
  CHECK(grow.sampled_norm == 10000.0);

  auto seven = is_bounded(op({"7"}, SpaceModel::truncated_naturals(30)));
  CHECK(seven.growth_flag == GrowthFlag::saturating);
  CHECK(seven.sampled_norm == 7.0);

  auto unit = is_bounded(op({"exp(i*x)"}, SpaceModel::interval_grid(0.0, 20.0, 0.1, true)));
  CHECK(unit.growth_flag == GrowthFlag::saturating);
  CHECK(unit.sampled_norm == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(is_bounded(op({"x"}, SpaceModel::finite(3))).growth_flag == GrowthFlag::saturating);
  CHECK_THROWS_AS((void)is_bounded(op({"x"}, SpaceModel::truncated_naturals(9))), std::invalid_argument);
  CHECK(to_string(GrowthFlag::increasing) == "increasing");
}

TEST_CASE("classify_growth") {
  std::vector<double> up{1, 2, 3, 4};
  CHECK(classify_growth(up) == GrowthFlag::increasing);
  std::vector<double> flat{1, 1, 1, 1.01};
  CHECK(classify_growth(flat) == GrowthFlag::saturating);
  std::vector<double> dip{1, 2, 5, 4};
  CHECK(classify_growth(dip) == GrowthFlag::saturating);
}

TEST_CASE("invert") {
  auto space = SpaceModel::truncated_naturals(20);
  auto two = invert(op({"2"}, space));
  for (auto const &o : two.phi().ops()) CHECK(o == CentralOperator({0.5}));

  auto inv = invert(example_iii(100));
  CHECK(operator_norm(inv) == 1.0);

  try {
    (void)invert(op({"1", "x - 3"}, space));
    FAIL("expected NotInvertible");
  } catch (NotInvertible const &e) {
    CHECK(e.point() == std::optional<std::size_t>{2});
    CHECK(e.entry() == 1);
    CHECK(e.modulus() == 0.0);
  }
}

TEST_CASE("inverse consistency") {
  oracles::Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    std::size_t m = oracles::uniform_index(rng, 1, 20), n = oracles::uniform_index(rng, 1, 4);
    auto phi = oracles::random_finite_field(rng, m, n, 10.0);
    MulOperator mo(phi);
    auto inv = invert(mo);
    auto s = random_section(rng, phi.space(), n);
    auto back = apply_mulop(inv, apply_mulop(mo, s));
    CHECK(section_norm(back - s) <= 1e-12 * std::max(1.0, section_norm(s)));
    double min_mod = std::numeric_limits<double>::infinity();
    for (auto const &o : phi.ops())
      for (auto z : o.diag()) min_mod = std::min(min_mod, std::abs(z));
    CHECK(operator_norm(inv) == doctest::Approx(1.0 / min_mod).epsilon(1e-15));
    auto twice = invert(inv);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(twice.phi().at(p)[i] - phi.at(p)[i]) <= 1e-13 * std::abs(phi.at(p)[i]));
  }
}

TEST_CASE("resolvent_sup") {
  auto m = example_iii(50);
  auto r1 = resolvent_sup(m, 1.0);
  CHECK(r1.min_distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r1.sup == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  auto r3 = resolvent_sup(m, 3i);
  CHECK(r3.sup == std::numeric_limits<double>::infinity());
  CHECK(r3.min_distance == 0.0);
  CHECK(resolvent_sup(op({"0"}, SpaceModel::finite(2)), 2.0).sup == 0.5);
}

TEST_CASE("spectrum_scan") {
  auto m = example_iii(10);
  std::vector<Complex> grid{1i, 2i, -1.0, -4.0, 1.0, 0.5 + 0.5i};
  auto rep = spectrum_scan(m, grid);
  REQUIRE(rep.entries.size() == 6);
  for (std::size_t k = 0; k < 4; ++k) CHECK(rep.entries[k].cls == SpectralClass::spectrum);
  CHECK(rep.entries[4].cls == SpectralClass::resolvent_set);
  CHECK(rep.entries[5].cls == SpectralClass::resolvent_set);
  CHECK(rep.threshold == default_spectrum_threshold);
  CHECK(rep.pole_tol == default_spectrum_pole_tol);

  auto zero = op({"0"}, SpaceModel::finite(3));
  std::vector<Complex> near{0.0, 1e-10, 1e-3, 1.0};
  auto z = spectrum_scan(zero, near);
  CHECK(z.entries[0].cls == SpectralClass::spectrum);
  CHECK(z.entries[1].cls == SpectralClass::spectrum);
  CHECK(z.entries[2].cls == SpectralClass::resolvent_set);
  CHECK(z.entries[3].cls == SpectralClass::resolvent_set);

  auto q = op({"i*x"}, SpaceModel::interval_grid(0.0, 20.0, 0.1, true));
  std::vector<Complex> line;
  for (int k = 0; k <= 200; ++k) line.push_back(Complex{0.0, q.space().coordinate(static_cast<std::size_t>(k))});
  line.push_back(1.0);
  auto qs = spectrum_scan(q, line);
  for (std::size_t k = 0; k + 1 < line.size(); ++k) CHECK(qs.entries[k].cls == SpectralClass::spectrum);
  CHECK(qs.entries.back().cls == SpectralClass::resolvent_set);
}

TEST_CASE("spectrum classification is the eigenvalue-distance rule") {
  oracles::Rng rng(44);
  for (int k = 0; k < 5; ++k) {
    auto phi = oracles::random_finite_field(rng, 8, 3, 3.0);
    std::vector<Complex> grid;
    for (int a = 0; a < 20; ++a)
      for (int b = 0; b < 20; ++b) grid.push_back(Complex{-3.0 + 6.0 * a / 19.0, -3.0 + 6.0 * b / 19.0});
    for (std::size_t p = 0; p < 4; ++p) grid.push_back(phi.at(p)[0]);
    grid.push_back(phi.at(5)[1] + 1e-7);
    grid.push_back(phi.at(6)[2] + 1e-5);
    auto eig = oracles::dense_eigenvalues(phi, rng);
    auto rep = spectrum_scan(MulOperator(phi), grid);
    for (std::size_t g = 0; g < grid.size(); ++g)
      CHECK(rep.entries[g].cls == oracles::classify_by_eigenvalues(grid[g], eig, rep.threshold, rep.pole_tol));
    CHECK(rep.entries[grid.size() - 2].cls == SpectralClass::spectrum);
    CHECK(rep.entries[grid.size() - 1].cls == SpectralClass::resolvent_set);
  }
}

TEST_CASE("closedness probe") {
  oracles::Rng rng(45);
  auto space = SpaceModel::truncated_naturals(60);
  auto m = example_iii(60);
  auto s = sec({"exp(-x)", "1/x^3"}, space);
  auto r = random_section(rng, space, 2);
  std::optional<Section> limit;
  for (int k = 1; k <= 60; ++k) {
    auto sk = s + Complex{std::ldexp(1.0, -k)} * r;
    limit = apply_mulop(m, sk);
  }
  CHECK(section_norm(*limit - apply_mulop(m, s)) <= 1e-10);
}
