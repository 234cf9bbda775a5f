// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "ptlat/domain.hpp"
#include "ptlat/errors.hpp"
#include "ptlat/metric.hpp"

using namespace ptlat;
using Catch::Matchers::WithinAbs;

namespace {

SquareMatrix ec4(double t) { return registry_model({ModelName::Ec4, t}); }
SquareMatrix strong(double t) { return registry_model({ModelName::Ec4StrongBond, t}); }

Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

}  // namespace

TEST_CASE("intertwiners of a diagonal matrix are diagonal", "[metric]") {
  const SquareMatrix d = SquareMatrix::diagonal(Eigen::Vector4d(-3, -1, 1, 3));
  const SolutionBasis b = intertwiner_basis(d);
  CHECK(b.dim == 4);
  for (const auto& m : b.basis) {
    CHECK((m - Eigen::MatrixXd(m.diagonal().asDiagonal())).norm() < 1e-14);
    CHECK_THAT(m.norm(), WithinAbs(1.0, 1e-14));
  }
  for (int i = 0; i < 4; ++i) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(4, 4);
    e(i, i) = 1;
    CHECK(expand_in_basis(e, b).residual < 1e-14);
  }
  CHECK(expand_in_basis(Eigen::MatrixXd::Identity(4, 4), b).residual < 1e-14);
}

TEST_CASE("kernel dimension and broken phase", "[metric]") {
  const SolutionBasis b = intertwiner_basis(ec4(1.0));
  CHECK(b.dim == 4);
  for (const auto& m : b.basis) CHECK(intertwiner_residual(m, ec4(1.0)) < kMetricTolerance);
  CHECK(expand_in_basis(paper_metric_ec4(1.0), b).residual < 1e-8);
  CHECK(expand_in_basis(paper_metric_ec4(0.5), intertwiner_basis(ec4(0.5))).residual < 1e-8);

  CHECK_THROWS_AS(intertwiner_basis(ec4(1.6)), NoMetricError);
  CHECK(intertwiner_kernel(ec4(1.6)).dim == 4);
  CHECK_THROWS_AS(intertwiner_kernel(SquareMatrix::identity(3)), DegeneracyError);
}

TEST_CASE("random symmetric matrix is far from the kernel", "[metric]") {
  std::mt19937 rng(2026);
  std::normal_distribution<double> g;
  Eigen::MatrixXd r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j) r(i, j) = r(j, i) = g(rng);
  CHECK(expand_in_basis(r, intertwiner_basis(ec4(0.5))).residual > 0.1);
}

TEST_CASE("intertwiner residual", "[metric]") {
  CHECK(intertwiner_residual(paper_metric_ec4(0.7), ec4(0.7)) <= 1e-12);
  Eigen::MatrixXd sym(2, 2);
  sym << 1, 2, 2, -3;
  CHECK(intertwiner_residual(Eigen::MatrixXd::Identity(2, 2), SquareMatrix(sym)) == 0.0);
  CHECK(intertwiner_residual(Eigen::MatrixXd::Identity(4, 4), ec4(1.0)) > 0.01);
  CHECK_THROWS_AS(intertwiner_residual(Eigen::MatrixXd::Identity(3, 3), ec4(1.0)), InvalidSpec);
}

TEST_CASE("spectral construction", "[metric]") {
  const std::vector<double> ones(4, 1.0);
  const Eigen::MatrixXd id = spectral_metric(SquareMatrix::diagonal(Eigen::Vector4d(-3, -1, 1, 3)), ones);
  CHECK((id - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);

  const Eigen::MatrixXd near_edge = spectral_metric(ec4(1.45), ones);
  CHECK(is_positive_definite(near_edge));
  CHECK(intertwiner_residual(near_edge, ec4(1.45)) < kMetricTolerance);

  CHECK_THROWS_AS(spectral_metric(ec4(1.6), ones), NoMetricError);
  CHECK_THROWS_AS(spectral_metric(ec4(1.0), std::vector<double>{1, 1, 1}), InvalidSpec);
  CHECK_THROWS_AS(spectral_metric(ec4(1.0), std::vector<double>{1, 1, 0, 1}), InvalidSpec);
}

TEST_CASE("closed-form metric is a spectral metric with positive weights", "[metric]") {
  // Θ(w) is linear in w, so its generators are differences of two evaluations.
  const SquareMatrix h = ec4(1.0);
  const std::vector<double> ones(4, 1.0);
  const Eigen::MatrixXd base = spectral_metric(h, ones);
  Eigen::MatrixXd a(16, 4);
  for (int k = 0; k < 4; ++k) {
    std::vector<double> w = ones;
    w[k] = 2.0;
    a.col(k) = (spectral_metric(h, w) - base).reshaped();
  }
  const Eigen::MatrixXd target = paper_metric_ec4(1.0);
  const Eigen::VectorXd w = a.colPivHouseholderQr().solve(target.reshaped().eval());
  const double residual = (a * w - target.reshaped()).norm() / target.norm();
  CHECK(residual < 1e-6);
  for (int k = 0; k < 4; ++k) CHECK(w(k) > 0);
}

TEST_CASE("closed-form metric of the equal-coupling ring", "[metric]") {
  CHECK(paper_metric_ec4(0.0) == 3.0 * Eigen::MatrixXd::Identity(4, 4));
  CHECK(paper_metric_ec4(2.0)(0, 1) == -6.0);

  const Eigen::VectorXd e = sorted_eigenvalues(paper_metric_ec4(1.0));
  CHECK_THAT(e(0), WithinAbs(3 - std::sqrt(8.0), 1e-12));
  CHECK_THAT(e(1), WithinAbs(5 - std::sqrt(20.0), 1e-12));
  CHECK_THAT(e(2), WithinAbs(3 + std::sqrt(8.0), 1e-12));
  CHECK_THAT(e(3), WithinAbs(5 + std::sqrt(20.0), 1e-12));

  for (double t = -1.2; t <= 1.2001; t += 0.024) {
    const auto expected = oracle::ec4_metric_eigenvalues(t);
    const Eigen::VectorXd got = sorted_eigenvalues(paper_metric_ec4(t));
    for (int i = 0; i < 4; ++i) CHECK_THAT(got(i), WithinAbs(expected[i], 1e-10));
    CHECK(intertwiner_residual(paper_metric_ec4(t), ec4(t)) <= 1e-12);
  }
}

TEST_CASE("closed-form metric of the strong-bond ring", "[metric]") {
  CHECK(paper_metric_ec4_strong(0.0) == 3.0 * Eigen::MatrixXd::Identity(4, 4));
  CHECK_THAT(paper_metric_ec4_strong(1.0)(0, 2), WithinAbs(96.0 / 113.0, 1e-15));
  CHECK(intertwiner_residual(paper_metric_ec4_strong(0.5), strong(0.5)) <= 1e-10);
  for (double t = -1.0; t <= 1.0001; t += 0.02) {
    CHECK(intertwiner_residual(paper_metric_ec4_strong(t), strong(t)) <= 1e-12);
    CHECK((paper_metric_ec4_strong(t) - paper_metric_ec4_strong(t).transpose()).norm() == 0.0);
  }
}

TEST_CASE("positivity intervals of the closed-form metrics", "[metric]") {
  const PositivityReport ec = positivity_interval(paper_metric_ec4_candidate(), 0, 1.3, 1e-12);
  REQUIRE(ec.intervals.size() == 1);
  CHECK(ec.intervals[0].lo == 0.0);
  CHECK_FALSE(ec.intervals[0].lo_refined);
  CHECK(ec.intervals[0].hi_refined);
  CHECK_THAT(ec.intervals[0].hi, WithinAbs(std::sqrt(1.5), 1e-10));
  CHECK_THAT(ec.min_eig_samples.front().second, WithinAbs(3.0, 1e-14));

  const PositivityReport sb = positivity_interval(paper_metric_ec4_strong_candidate(), 0, 1.2, 1e-12);
  CHECK_THAT(sb.primary().hi, WithinAbs(1.082854389, 1e-9));

  const MetricCandidate negative{MetricProvenance::BasisCombination,
                                 [](double) { return Eigen::MatrixXd(-Eigen::MatrixXd::Identity(2, 2)); }};
  const PositivityReport none = positivity_interval(negative, 0, 1, 1e-10, 11);
  CHECK(none.empty());
  CHECK_THROWS_AS(none.primary(), NotFoundError);
}

TEST_CASE("positive definiteness test", "[metric]") {
  CHECK(is_positive_definite(Eigen::MatrixXd::Identity(3, 3)));
  Eigen::MatrixXd m(2, 2);
  m << 1, 1, 1, 1;
  CHECK_FALSE(is_positive_definite(m));
  m(1, 1) = 1 + 1e-13;
  CHECK(is_positive_definite(m));
  CHECK_THAT(min_eigenvalue(m), WithinAbs(5e-14, 1e-15));
}

TEST_CASE("tracked metric of the recoupled ring", "[metric]") {
  const double b = recoupled_metric_boundary(1e-10);
  CHECK_THAT(b, WithinAbs(0.9658391622, 1e-6));
  CHECK_THAT(b, WithinAbs((45 - 3 * std::sqrt(97.0)) / 16, 1e-8));
}

TEST_CASE("positivity domains sit inside the diagonalizable domains", "[metric]") {
  const double ec = positivity_interval(paper_metric_ec4_candidate(), 0, 1.6, 1e-10).primary().hi;
  CHECK(ec < std::sqrt(2.0));
  const double sb = positivity_interval(paper_metric_ec4_strong_candidate(), 0, 1.6, 1e-10).primary().hi;
  CHECK(sb < refine_reality_boundary(registry_family(ModelName::Ec4StrongBond), 1.0, 1.2, 1e-10));
  const PositivityReport tracked = tracked_positivity_interval(registry_family(ModelName::Ec4), -1.6, 1.6, 1e-10);
  CHECK(tracked.primary().hi < std::sqrt(2.0));
  CHECK(tracked.primary().lo > -std::sqrt(2.0));
}

TEST_CASE("spectral metrics are positive definite for random weights", "[metric]") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.05, 5.0);
  for (ModelName m : all_models()) {
    const ModelFamily f = registry_family(m);
    for (double t : {0.3, 0.55, 0.8}) {
      const SquareMatrix h = f.at(t);
      if (count_real(eigenvalues(h)) != h.size()) continue;
      std::vector<double> w(h.size());
      for (auto& x : w) x = u(rng);
      const Eigen::MatrixXd theta = spectral_metric(h, w);
      CHECK(min_eigenvalue(theta) > 0);
      CHECK(intertwiner_residual(theta, h) < kMetricTolerance);
      CHECK(intertwiner_basis(h).dim == h.size());
    }
  }
}

TEST_CASE("tracking refuses a kernel that rotates away", "[metric]") {
  // At t = 1 the eigenbasis is turned so that e1 maps to the uniform vector.
  const int n = 6;
  Eigen::VectorXd u = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  Eigen::VectorXd v = Eigen::VectorXd::Unit(n, 0) - u;
  v.normalize();
  const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n) - 2 * v * v.transpose();
  Eigen::VectorXd d(n);
  d << 1, 2, 3, 4, 5, 6;
  const ModelFamily f("rotating", n, {0, 1}, [=](double t) {
    const Eigen::MatrixXd dm = d.asDiagonal();
    return SquareMatrix(t < 0.5 ? dm : Eigen::MatrixXd(q * dm * q.transpose()));
  });

  Eigen::VectorXd start = Eigen::VectorXd::Constant(n, 1e-3);
  start(0) = 1;
  TrackedMetric tracker(f, 0.0, start.asDiagonal());
  CHECK_THROWS_AS(tracker.peek(1.0), TrackingError);
  CHECK_NOTHROW(tracker.peek(0.2));
}
