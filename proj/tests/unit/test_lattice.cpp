// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "ptlat/errors.hpp"
#include "ptlat/lattice.hpp"

using namespace ptlat;

namespace {

LatticeSpec spec_of(std::vector<double> diag, std::vector<double> upper, Topology topo) {
  LatticeSpec s;
  s.n = static_cast<int>(diag.size());
  for (double d : diag) s.diag.emplace_back(d);
  for (double c : upper) s.upper.emplace_back(c);
  s.topology = topo;
  return s;
}

}  // namespace

TEST_CASE("open chain matches entry-by-entry construction", "[lattice]") {
  const std::vector<double> diag{-5, -3, -1, 1, 3, 5};
  const std::vector<double> upper{0.3, -1.2, 2.5, 0.7, 1.1};
  const SquareMatrix h = build_open_chain(spec_of(diag, upper, Topology::Open));
  CHECK((h.values() - oracle::dense_lattice(diag, upper, false)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h(0, 1) == 0.3);
  CHECK(h(1, 0) == -0.3);
}

TEST_CASE("ring adds the closing bond with opposite signs", "[lattice]") {
  const std::vector<double> diag{-3, -1, 1, 3};
  const std::vector<double> upper{1, 1, 1, 1.5};
  const SquareMatrix h = build_ring(spec_of(diag, upper, Topology::Ring));
  CHECK(h(0, 3) == -1.5);
  CHECK(h(3, 0) == 1.5);
  CHECK((h.values() - oracle::dense_lattice(diag, upper, true)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("two-site ring folds the closing bond onto the first one", "[lattice]") {
  const SquareMatrix h = build_lattice(spec_of({-1, 1}, {2, 0.5}, Topology::Ring));
  CHECK(h(0, 1) == 1.5);
  CHECK(h(1, 0) == -1.5);
}

TEST_CASE("lattice specs are validated", "[lattice]") {
  CHECK_THROWS_AS(build_lattice(spec_of({1, 2, 3}, {1, 1, 1}, Topology::Ring)), InvalidSpec);
  CHECK_THROWS_AS(build_lattice(spec_of({1, 2, 3}, {1}, Topology::Open)), InvalidSpec);
  CHECK_THROWS_AS(build_lattice(spec_of({1, 2, 3, 4}, {1, 1, 1}, Topology::Ring)), InvalidSpec);
  LatticeSpec empty;
  CHECK_THROWS_AS(build_lattice(empty), InvalidSpec);
  CHECK(build_lattice(spec_of({7}, {}, Topology::Open)).values()(0, 0) == 7.0);
}

TEST_CASE("matrices must be square and finite", "[lattice]") {
  CHECK_THROWS_AS(SquareMatrix(Eigen::MatrixXd(Eigen::MatrixXd::Zero(2, 3))), InvalidSpec);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SquareMatrix(bad), InvalidSpec);
  CHECK(SquareMatrix::identity(3).trace() == 3.0);
}

TEST_CASE("antisymmetric hopping with parity is PT-symmetric", "[lattice]") {
  const SquareMatrix h = build_lattice(spec_of({-3, -1, 1, 3}, {0.4, 1.3, -0.2, 2.0}, Topology::Ring));
  CHECK(pt_defect(h) == 0.0);
  CHECK(is_pt_symmetric(h));
  CHECK(parity(4).values().diagonal() == Eigen::Vector4d(1, -1, 1, -1));

  Eigen::MatrixXd sym = h.values();
  sym(1, 0) = sym(0, 1);  // symmetric bond breaks H^T P = P H
  CHECK_FALSE(is_pt_symmetric(SquareMatrix(sym)));
}

TEST_CASE("precise entries round to the double values", "[lattice]") {
  LatticeSpec s;
  s.n = 2;
  s.diag = {Real(0), Real(0)};
  s.upper = {sqrt(Real(2))};
  const SquareMatrix h = build_lattice(s);
  CHECK(h(0, 1) == std::sqrt(2.0));
  CHECK(abs(h.precise()(0, 1) * h.precise()(0, 1) - 2) < Real("1e-60"));
}
