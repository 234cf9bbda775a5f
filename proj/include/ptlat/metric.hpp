// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ptlat/models.hpp"
#include "ptlat/spectrum.hpp"

namespace ptlat {

/// Relative residual below which a symmetric matrix counts as an intertwiner.
inline constexpr double kMetricTolerance = 1e-10;

/// Frobenius-orthonormal basis of the real symmetric solutions of H^T Θ = Θ H.
struct SolutionBasis {
  std::vector<Eigen::MatrixXd> basis;
  int dim = 0;
};

/// Kernel of Θ -> H^T Θ - Θ H on symmetric matrices. Requires a real, simple
/// spectrum; throws NoMetricError otherwise and DegeneracyError if dim != n.
SolutionBasis intertwiner_basis(const SquareMatrix& h, double eps_real = kDefaultEpsReal);

/// Same kernel without the phase check. The kernel keeps dimension n for every
/// non-derogatory H, including broken-phase ones, which lets a tracked section be
/// followed through the boundary of positivity.
SolutionBasis intertwiner_kernel(const SquareMatrix& h);

/// ||H^T Θ - Θ H||_F / (||H||_F ||Θ||_F).
double intertwiner_residual(const Eigen::MatrixXd& theta, const SquareMatrix& h);

/// Θ = sum_n w_n l_n l_n^T over unit-norm left eigenvectors. Throws NoMetricError
/// in the broken phase and InvalidSpec for non-positive or mis-sized weights.
Eigen::MatrixXd spectral_metric(const SquareMatrix& h, std::span<const double> weights);

struct BasisExpansion {
  std::vector<double> coefficients;
  /// ||Θ - sum c_j B_j||_F / ||Θ||_F.
  double residual = 0.0;
};

BasisExpansion expand_in_basis(const Eigen::MatrixXd& theta, const SolutionBasis& basis);

enum class MetricProvenance { ClosedFormEc4, ClosedFormEc4Strong, SpectralConstruction, BasisCombination };

const char* to_string(MetricProvenance p);

struct MetricCandidate {
  MetricProvenance provenance;
  std::function<Eigen::MatrixXd(double)> at;
};

Eigen::MatrixXd paper_metric_ec4(double t);
/// Closed-form metric for the strong-bond ring; entries are rational in t over 17t^2 + 96.
Eigen::MatrixXd paper_metric_ec4_strong(double t);

MetricCandidate paper_metric_ec4_candidate();
MetricCandidate paper_metric_ec4_strong_candidate();
/// Spectral construction with fixed weights, evaluated on family.at(t).
MetricCandidate spectral_metric_candidate(const ModelFamily& family, std::vector<double> weights);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Eigen::MatrixXd& theta);
/// Cholesky first; a symmetric eigendecomposition decides when the factorization
/// fails or ends on a pivot too small to trust.
bool is_positive_definite(const Eigen::MatrixXd& theta);

struct PositivityInterval {
  double lo = 0.0;
  double hi = 0.0;
  /// False when the end is the edge of the scanned range rather than a refined sign change.
  bool lo_refined = false;
  bool hi_refined = false;
};

struct PositivityReport {
  /// Maximal runs of positive definiteness, ordered.
  std::vector<PositivityInterval> intervals;
  /// (t, min eigenvalue) on the coarse grid.
  std::vector<std::pair<double, double>> min_eig_samples;
  double tol = 0.0;

  bool empty() const { return intervals.empty(); }
  /// Longest run.
  const PositivityInterval& primary() const;
};

PositivityReport positivity_interval(const MetricCandidate& candidate, double lo, double hi, double tol,
                                     int coarse_steps = 0);

/// Metric section continued along a grid from a known metric at the first point.
/// Each step projects the previous Θ onto the kernel at the new t.
class TrackedMetric {
 public:
  /// `theta0` is projected onto the kernel at `anchor` and must be positive definite there.
  TrackedMetric(const ModelFamily& family, double anchor, const Eigen::MatrixXd& theta0);

  double t() const { return t_; }
  const Eigen::MatrixXd& theta() const { return theta_; }

  /// Moves the section to t. Throws TrackingError if the kernel rotates so far
  /// between steps that less than half of Θ survives the projection.
  void advance(double t);
  /// Θ at t by a single projection from the current point, without moving.
  Eigen::MatrixXd peek(double t) const;

 private:
  const ModelFamily* family_;
  double t_;
  Eigen::MatrixXd theta_;
};

/// Positivity interval of the section tracked from family.metric_anchor() with Θ = I.
/// Steps of `step` in t; sign changes are refined by bisection to `tol`.
PositivityReport tracked_positivity_interval(const ModelFamily& family, double lo, double hi, double tol,
                                             double step = 1e-3);

/// Upper end of the positivity interval of the tracked metric for the recoupled ring.
double recoupled_metric_boundary(double tol);

}  // namespace ptlat
