// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "ptlat/domain.hpp"
#include "ptlat/errors.hpp"

using namespace ptlat;
using Catch::Matchers::WithinAbs;

namespace {

// Boundaries of the perturbed six-site rings, from an independent extended-precision
// characteristic-polynomial scan. The published first-perturbation values (0.159 and
// -0.2818) are not reproduced by the stated perturbation; see README.
constexpr double kW1Right = 0.16316036036;
constexpr double kW1Left = -0.28204255045;
constexpr double kW2[] = {-0.010018722879, 0.009178157964, 0.100127915195, 0.303308776777};

const ModelFamily& family(ModelName m) {
  static std::map<ModelName, ModelFamily> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, registry_family(m)).first;
  return it->second;
}

std::vector<double> boundaries(const DomainReport& r) {
  std::vector<double> out;
  for (std::size_t i = 1; i < r.intervals.size(); ++i) out.push_back(r.intervals[i].lo);
  return out;
}

}  // namespace

TEST_CASE("reality profile samples count_real", "[domain]") {
  const std::vector<double> grid{0, 1, 1.45, 1.6};
  CHECK(reality_profile(family(ModelName::Ec4), grid).counts == std::vector<int>{4, 4, 4, 2});
  const std::vector<double> two{-0.5, 0.5};
  CHECK(reality_profile(family(ModelName::Mdg6Open), two).counts == std::vector<int>{0, 6});
  CHECK(reality_profile(family(ModelName::Ec4), std::vector<double>{}).counts.empty());

  const std::vector<double> unsorted{1, 0};
  CHECK_THROWS_AS(reality_profile(family(ModelName::Ec4), unsorted), InvalidSpec);
  const std::vector<double> outside{0.5, 1.5};
  CHECK_THROWS_AS(reality_profile(family(ModelName::Mdg6W1), outside), DomainError);
}

TEST_CASE("complexification boundary of the equal-coupling ring", "[domain]") {
  const double b = refine_reality_boundary(family(ModelName::Ec4), 1.4, 1.6, 1e-10);
  CHECK_THAT(b, WithinAbs(1.5, 1e-9));
  CHECK_THROWS_AS(refine_reality_boundary(family(ModelName::Ec4), 0.0, 1.0, 1e-10), InvalidBracket);
  CHECK_THROWS_AS(refine_reality_boundary(family(ModelName::Ec4), 1.4, 1.6, 0.0), InvalidSpec);
}

TEST_CASE("bisection output separates different counts", "[domain]") {
  const double tol = 1e-8;
  for (auto [m, lo, hi] : std::vector<std::tuple<ModelName, double, double>>{
           {ModelName::Ec4, 1.4, 1.6}, {ModelName::Ec4StrongBond, 1.0, 1.2}, {ModelName::Mdg6W1, -0.4, -0.2}}) {
    const ModelFamily& f = family(m);
    const double b = refine_reality_boundary(f, lo, hi, tol);
    CHECK(count_real(eigenvalues(f.at(b - tol))) != count_real(eigenvalues(f.at(b + tol))));
  }
}

TEST_CASE("first perturbation splits the collapse into two boundaries", "[domain]") {
  const ModelFamily& f = family(ModelName::Mdg6W1);
  CHECK_THAT(refine_reality_boundary(f, 0.1, 0.2, 1e-10), WithinAbs(kW1Right, 1e-9));
  CHECK_THAT(refine_reality_boundary(f, -0.4, -0.2, 1e-10), WithinAbs(kW1Left, 1e-9));

  auto build = [&](double t) { return f.at(t); };
  CHECK_THAT(oracle::boundary(build, 0.1, 0.2, 1e-11), WithinAbs(kW1Right, 1e-9));
  CHECK_THAT(oracle::boundary(build, -0.4, -0.2, 1e-11), WithinAbs(kW1Left, 1e-9));
}

TEST_CASE("first perturbation count pattern", "[domain]") {
  // Two eigenvalues stay real between the boundaries, not four.
  const std::vector<double> grid{-0.4, 0.0, 0.2};
  const auto counts = reality_profile(family(ModelName::Mdg6W1), grid).counts;
  CHECK(counts == std::vector<int>{0, 2, 6});
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(oracle::real_count(family(ModelName::Mdg6W1).at(grid[i])) == counts[i]);
}

TEST_CASE("coalescence points of the equal-coupling ring", "[domain]") {
  const ModelFamily& f = family(ModelName::Ec4);
  const EPLocation right = locate_coalescence_ep(f, 1.3, 1.5, 1e-10);
  CHECK_THAT(right.t_star, WithinAbs(std::sqrt(2.0), 1e-8));
  CHECK(right.order == 2);
  CHECK(right.kind == EpKind::RealCoalescence);
  CHECK(right.residual <= 1e-4);
  CHECK(degeneracy_order(f.at(right.t_star), 1e-4) >= 2);

  const EPLocation left = locate_coalescence_ep(f, -1.5, -1.3, 1e-10);
  CHECK_THAT(left.t_star, WithinAbs(-std::sqrt(2.0), 1e-8));

  CHECK_THROWS_AS(locate_coalescence_ep(f, 0.0, 1.0, 1e-10), NotFoundError);
}

TEST_CASE("complete collapse of the six-site chain", "[domain]") {
  const ModelFamily& f = family(ModelName::Mdg6Open);
  const EPLocation ep = locate_coalescence_ep(f, -0.1, 0.1, 1e-10);
  CHECK(std::abs(ep.t_star) < 1e-8);
  CHECK(ep.order == 6);

  const DegeneracyInfo info = degeneracy(f.at(0.0), 1e-4);
  CHECK(info.order == 6);
  CHECK(info.geometric_multiplicity == 1);
}

TEST_CASE("degeneracy order", "[domain]") {
  CHECK(degeneracy_order(family(ModelName::Ec4).at(std::sqrt(2.0)), 1e-4) == 2);
  CHECK(degeneracy_order(SquareMatrix::diagonal(Eigen::Vector3d(1, 2, 3)), 1e-4) == 1);
  CHECK(degeneracy(SquareMatrix::identity(3), 1e-4).geometric_multiplicity == 3);
}

TEST_CASE("domain report of the equal-coupling ring", "[domain]") {
  const DomainReport r = domain_report(family(ModelName::Ec4), {0, 1.6}, 3201, 1e-10);
  REQUIRE(r.intervals.size() == 2);
  CHECK(r.intervals[0].count_real == 4);
  CHECK(r.intervals[1].count_real == 2);
  CHECK_THAT(r.intervals[0].hi, WithinAbs(1.5, 1e-9));
  REQUIRE(r.exceptional_points.size() == 2);
  CHECK(r.exceptional_points[0].kind == EpKind::RealCoalescence);
  CHECK_THAT(r.exceptional_points[0].t_star, WithinAbs(std::sqrt(2.0), 1e-8));
  CHECK(r.exceptional_points[1].kind == EpKind::Complexification);
}

TEST_CASE("domain report of the strong-bond ring", "[domain]") {
  const DomainReport r = domain_report(family(ModelName::Ec4StrongBond), {0, 1.6}, 3201, 1e-10);
  const auto b = boundaries(r);
  REQUIRE(b.size() == 3);
  CHECK_THAT(b[0], WithinAbs(1.13137084989848, 1e-9));
  CHECK_THAT(b[1], WithinAbs(1.37198868114007, 1e-9));
  CHECK_THAT(b[2], WithinAbs(1.37228132326901, 1e-9));
  CHECK(r.intervals.back().count_real == 2);
  CHECK(r.intervals[2].count_real == 4);
}

TEST_CASE("domain report of the recoupled ring", "[domain]") {
  const DomainReport r = domain_report(family(ModelName::Ec4Recoupled), {0, 1.2}, 2401, 1e-10);
  CHECK_THAT(boundaries(r).at(0), WithinAbs((45 - 3 * std::sqrt(97.0)) / 16, 1e-9));
}

TEST_CASE("domain report invariants", "[domain]") {
  for (ModelName m : all_models()) {
    const ParameterRange range{-0.5, 1.0};
    const double tol = 1e-9;
    const DomainReport r = domain_report(family(m), range, 1501, tol);
    REQUIRE_FALSE(r.intervals.empty());
    CHECK(r.intervals.front().lo == range.lo);
    CHECK(r.intervals.back().hi == range.hi);
    for (std::size_t i = 0; i + 1 < r.intervals.size(); ++i) {
      CHECK(r.intervals[i].hi == r.intervals[i + 1].lo);
      CHECK(r.intervals[i].count_real != r.intervals[i + 1].count_real);
    }
    for (const auto& iv : r.intervals) {
      CHECK(iv.lo <= iv.hi);
      CHECK(iv.count_real % 2 == 0);
    }
    for (const auto& ep : r.exceptional_points) {
      CHECK(ep.order >= 2);
      if (ep.kind != EpKind::Complexification) continue;
      bool on_boundary = false;
      for (std::size_t i = 1; i < r.intervals.size(); ++i)
        on_boundary = on_boundary || std::abs(r.intervals[i].lo - ep.t_star) <= tol;
      CHECK(on_boundary);
    }
  }
  CHECK_THROWS_AS(domain_report(family(ModelName::Ec4), {0, 1}, 1, 1e-10), InvalidSpec);
}

TEST_CASE("boundaries of the four-site rings are symmetric in t", "[domain]") {
  const double tol = 1e-10;
  for (ModelName m : {ModelName::Ec4, ModelName::Ec4StrongBond, ModelName::Ec4Recoupled}) {
    const auto pos = boundaries(domain_report(family(m), {0.01, 1.6}, 3181, tol));
    const auto neg = boundaries(domain_report(family(m), {-1.6, -0.01}, 3181, tol));
    REQUIRE(pos.size() == neg.size());
    for (std::size_t i = 0; i < pos.size(); ++i) CHECK_THAT(pos[i], WithinAbs(-neg[neg.size() - 1 - i], 2 * tol));
  }
}

TEST_CASE("second perturbation boundaries and reality island", "[domain]") {
  const ModelFamily& f = family(ModelName::Mdg6W2);
  const auto b = boundaries(domain_report(f, {-0.5, 1.0}, 3001, 1e-10));
  REQUIRE(b.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK_THAT(b[i], WithinAbs(kW2[i], 1e-9));

  const auto islands = reality_islands(f, {-0.5, 0.5}, 4, 2001, 1e-10);
  REQUIRE(islands.size() == 2);
  CHECK(islands[0].lo < 0.0);
  CHECK(islands[0].hi > 0.0);
  CHECK_THAT(islands[0].hi - islands[0].lo, WithinAbs(kW2[1] - kW2[0], 1e-9));
}

TEST_CASE("island queries", "[domain]") {
  CHECK(reality_islands(family(ModelName::Ec4), {0, 1.6}, 0, 3201, 1e-10).empty());
  CHECK_THROWS_AS(reality_islands(family(ModelName::Ec4), {0, 1.6}, 3, 3201, 1e-10), InvalidSpec);
  CHECK_THROWS_AS(reality_islands(family(ModelName::Ec4), {0, 1.6}, 6, 3201, 1e-10), InvalidSpec);
}

TEST_CASE("default coarse grid density", "[domain]") {
  CHECK(default_coarse_steps({0, 1}) == 2001);
  CHECK(default_coarse_steps({-1.6, 1.6}) == 6401);
  CHECK(default_coarse_steps({0, 0}) == 2);
}
