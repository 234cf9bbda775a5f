// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/metric.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ptlat/domain.hpp"
#include "ptlat/errors.hpp"

namespace ptlat {

namespace {

// Frobenius-orthonormal basis of symmetric n x n matrices, in (i <= j) order.
std::vector<Eigen::MatrixXd> symmetric_units(int n) {
  std::vector<Eigen::MatrixXd> units;
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      if (i == j) {
        e(i, i) = 1.0;
      } else {
        e(i, j) = e(j, i) = r;
      }
      units.push_back(std::move(e));
    }
  }
  return units;
}

double frobenius_dot(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

Eigen::MatrixXd project(const Eigen::MatrixXd& theta, const SolutionBasis& kernel) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(theta.rows(), theta.cols());
  for (const auto& b : kernel.basis) p += frobenius_dot(b, theta) * b;
  return p;
}

}  // namespace

SolutionBasis intertwiner_kernel(const SquareMatrix& h) {
  const int n = h.size();
  const Eigen::MatrixXd& hv = h.values();
  const auto units = symmetric_units(n);
  const int m = static_cast<int>(units.size());
  const int rows = n * (n - 1) / 2;

  // H^T S - S H is antisymmetric for symmetric S; its strict upper triangle determines it.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(std::max(rows, 1), m);
  for (int k = 0; k < m; ++k) {
    const Eigen::MatrixXd image = hv.transpose() * units[k] - units[k] * hv;
    int r = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a(r++, k) = image(i, j);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double threshold = kMetricTolerance * std::max(1.0, h.norm());
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  if (n == 1) rank = 0;

  SolutionBasis out;
  for (int k = rank; k < m; ++k) {
    Eigen::VectorXd c = svd.matrixV().col(k);
    Eigen::Index big;
    c.cwiseAbs().maxCoeff(&big);
    if (c(big) < 0) c = -c;
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < m; ++j) theta += c(j) * units[j];
    out.basis.push_back(std::move(theta));
  }
  out.dim = static_cast<int>(out.basis.size());
  if (out.dim != n) {
    throw DegeneracyError("intertwiner kernel has dimension " + std::to_string(out.dim) + ", expected " +
                          std::to_string(n) + " (degenerate spectrum)");
  }
  return out;
}

SolutionBasis intertwiner_basis(const SquareMatrix& h, double eps_real) {
  const Spectrum s = eigenvalues(h);
  const int real = count_real(s, eps_real);
  if (real != h.size()) {
    throw NoMetricError("spectrum has " + std::to_string(h.size() - real) +
                        " complex eigenvalues, no metric exists");
  }
  return intertwiner_kernel(h);
}

double intertwiner_residual(const Eigen::MatrixXd& theta, const SquareMatrix& h) {
  if (theta.rows() != h.size() || theta.cols() != h.size()) {
    throw InvalidSpec("metric and Hamiltonian sizes differ");
  }
  const Eigen::MatrixXd& hv = h.values();
  const double denom = hv.norm() * theta.norm();
  if (denom == 0.0) return 0.0;
  return (hv.transpose() * theta - theta * hv).norm() / denom;
}

Eigen::MatrixXd spectral_metric(const SquareMatrix& h, std::span<const double> weights) {
  const int n = h.size();
  if (static_cast<int>(weights.size()) != n) {
    throw InvalidSpec("spectral metric needs " + std::to_string(n) + " weights, got " +
                      std::to_string(weights.size()));
  }
  for (double w : weights)
    if (!(w > 0) || !std::isfinite(w)) throw InvalidSpec("spectral metric weights must be positive");

  if (count_real(eigenvalues(h)) != n) throw NoMetricError("broken PT phase, no metric exists");
  const auto pairs = left_right_pairs(h);

  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd l = pairs[k].left;
    Eigen::Index big;
    l.cwiseAbs().maxCoeff(&big);
    l *= std::conj(l(big)) / std::abs(l(big));
    Eigen::VectorXd lr = l.real();
    lr.normalize();
    theta += weights[k] * lr * lr.transpose();
  }
  return (theta + theta.transpose()) / 2;
}

BasisExpansion expand_in_basis(const Eigen::MatrixXd& theta, const SolutionBasis& basis) {
  BasisExpansion out;
  Eigen::MatrixXd approx = Eigen::MatrixXd::Zero(theta.rows(), theta.cols());
  for (const auto& b : basis.basis) {
    if (b.rows() != theta.rows() || b.cols() != theta.cols()) throw InvalidSpec("basis and metric sizes differ");
    const double c = frobenius_dot(b, theta);
    out.coefficients.push_back(c);
    approx += c * b;
  }
  const double norm = theta.norm();
  out.residual = norm == 0.0 ? 0.0 : (theta - approx).norm() / norm;
  return out;
}

const char* to_string(MetricProvenance p) {
  switch (p) {
    case MetricProvenance::ClosedFormEc4:
      return "closed-form-ec4";
    case MetricProvenance::ClosedFormEc4Strong:
      return "closed-form-ec4-strongbond";
    case MetricProvenance::SpectralConstruction:
      return "spectral";
    case MetricProvenance::BasisCombination:
      return "tracked-section";
  }
  return "unknown";
}

Eigen::MatrixXd paper_metric_ec4(double t) {
  const double q = 3 + t * t;
  const double a = -3 * t;
  const double b = t * t;
  Eigen::MatrixXd m(4, 4);
  m << q, a, b, t,
       a, q, a, b,
       b, a, q, a,
       t, b, a, q;
  return m;
}

Eigen::MatrixXd paper_metric_ec4_strong(double t) {
  const double t2 = t * t;
  const double d = 17 * t2 + 96;
  const double q = 3 + t2;
  const double a = q * t * (13 * t2 - 96) / d;
  const double b = 24 * q * t2 / d;
  const double c = q * t * (t2 + 96) / (2 * d);
  const double e = q * t * (7 * t2 - 96) / d;
  Eigen::MatrixXd m(4, 4);
  m << q, a, b, c,
       a, q, e, b,
       b, e, q, a,
       c, b, a, q;
  return m;
}

MetricCandidate paper_metric_ec4_candidate() {
  return {MetricProvenance::ClosedFormEc4, [](double t) { return paper_metric_ec4(t); }};
}

MetricCandidate paper_metric_ec4_strong_candidate() {
  return {MetricProvenance::ClosedFormEc4Strong, [](double t) { return paper_metric_ec4_strong(t); }};
}

MetricCandidate spectral_metric_candidate(const ModelFamily& family, std::vector<double> weights) {
  return {MetricProvenance::SpectralConstruction,
          [family, weights = std::move(weights)](double t) { return spectral_metric(family.at(t), weights); }};
}

double min_eigenvalue(const Eigen::MatrixXd& theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(theta, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool is_positive_definite(const Eigen::MatrixXd& theta) {
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() == Eigen::Success) {
    const double smallest_pivot = llt.matrixL().toDenseMatrix().diagonal().minCoeff();
    const double scale = theta.diagonal().cwiseAbs().maxCoeff();
    if (smallest_pivot * smallest_pivot > 1e-10 * scale) return true;
  }
  return min_eigenvalue(theta) > 0;
}

const PositivityInterval& PositivityReport::primary() const {
  if (intervals.empty()) throw NotFoundError("metric is positive definite nowhere in the scanned range");
  return *std::max_element(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) {
    return (a.hi - a.lo) < (b.hi - b.lo);
  });
}

namespace {

// Non-positive and undefined both count as "not a metric".
bool positive_at(const MetricCandidate& candidate, double t) {
  try {
    return is_positive_definite(candidate.at(t));
  } catch (const NumericalError&) {
    return false;
  }
}

template <class Positive>
double bisect_sign(double inside, double outside, double tol, Positive&& positive) {
  while (std::abs(outside - inside) > tol) {
    const double mid = inside + (outside - inside) / 2;
    if (mid == inside || mid == outside) break;
    if (positive(mid)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return inside + (outside - inside) / 2;
}

}  // namespace

PositivityReport positivity_interval(const MetricCandidate& candidate, double lo, double hi, double tol,
                                     int coarse_steps) {
  if (!(lo < hi)) throw InvalidSpec("positivity scan needs lo < hi");
  if (!(tol > 0)) throw InvalidSpec("positivity tolerance must be positive");
  if (coarse_steps == 0) coarse_steps = default_coarse_steps({lo, hi});
  if (coarse_steps < 2) throw InvalidSpec("positivity scan needs at least 2 coarse steps");

  PositivityReport report;
  report.tol = tol;
  std::vector<char> positive(coarse_steps);
  for (int i = 0; i < coarse_steps; ++i) {
    const double t = i + 1 == coarse_steps ? hi : lo + (hi - lo) * i / (coarse_steps - 1);
    double me = std::numeric_limits<double>::quiet_NaN();
    try {
      const Eigen::MatrixXd theta = candidate.at(t);
      me = min_eigenvalue(theta);
      positive[i] = is_positive_definite(theta);
    } catch (const NumericalError&) {
      positive[i] = false;
    }
    report.min_eig_samples.emplace_back(t, me);
  }

  auto pos = [&](double t) { return positive_at(candidate, t); };
  for (int i = 0; i < coarse_steps;) {
    if (!positive[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < coarse_steps && positive[j + 1]) ++j;
    const auto& s = report.min_eig_samples;
    PositivityInterval iv;
    iv.lo = i == 0 ? lo : bisect_sign(s[i].first, s[i - 1].first, tol, pos);
    iv.lo_refined = i != 0;
    iv.hi = j + 1 == coarse_steps ? hi : bisect_sign(s[j].first, s[j + 1].first, tol, pos);
    iv.hi_refined = j + 1 != coarse_steps;
    report.intervals.push_back(iv);
    i = j + 1;
  }
  return report;
}

TrackedMetric::TrackedMetric(const ModelFamily& family, double anchor, const Eigen::MatrixXd& theta0)
    : family_(&family), t_(anchor) {
  const SolutionBasis kernel = intertwiner_kernel(family.at(anchor));
  theta_ = project(theta0, kernel);
  if (!is_positive_definite(theta_)) {
    throw NoMetricError(family.name() + ": starting matrix does not project to a metric at t=" +
                        std::to_string(anchor));
  }
}

Eigen::MatrixXd TrackedMetric::peek(double t) const {
  const SolutionBasis kernel = intertwiner_kernel(family_->at(t));
  const Eigen::MatrixXd p = project(theta_, kernel);
  const double kept = p.norm() / theta_.norm();
  if (kept < 0.5) {
    throw TrackingError(family_->name() + ": metric section lost continuity between t=" + std::to_string(t_) +
                        " and t=" + std::to_string(t) + " (kept " + std::to_string(kept) + ")");
  }
  return p / kept;
}

void TrackedMetric::advance(double t) {
  theta_ = peek(t);
  t_ = t;
}

PositivityReport tracked_positivity_interval(const ModelFamily& family, double lo, double hi, double tol,
                                             double step) {
  const double anchor = family.metric_anchor();
  if (!(lo <= anchor && anchor <= hi)) {
    throw InvalidSpec(family.name() + ": tracking anchor t=" + std::to_string(anchor) + " is outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (!(tol > 0) || !(step > 0)) throw InvalidSpec("tracking needs positive tol and step");

  const int n = family.dimension();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  PositivityReport report;
  report.tol = tol;

  // Follows the run of positivity that contains the anchor in one direction.
  auto walk = [&](double end, double sign, bool& refined) {
    TrackedMetric tracker(family, anchor, identity);
    std::vector<std::pair<double, double>> samples;
    samples.emplace_back(anchor, min_eigenvalue(tracker.theta()));
    double t = anchor;
    while (sign * (end - t) > 0) {
      const double next = sign * (end - t) > step ? t + sign * step : end;
      const Eigen::MatrixXd theta = tracker.peek(next);
      samples.emplace_back(next, min_eigenvalue(theta));
      if (!is_positive_definite(theta)) {
        refined = true;
        const double boundary = bisect_sign(t, next, tol, [&](double x) {
          try {
            return is_positive_definite(tracker.peek(x));
          } catch (const TrackingError&) {
            return false;
          }
        });
        return std::make_pair(boundary, samples);
      }
      tracker.advance(next);
      t = next;
    }
    refined = false;
    return std::make_pair(end, samples);
  };

  TrackedMetric probe(family, anchor, identity);  // throws if the anchor has no metric
  PositivityInterval iv;
  auto [upper, up_samples] = walk(hi, +1.0, iv.hi_refined);
  auto [lower, down_samples] = walk(lo, -1.0, iv.lo_refined);
  iv.lo = lower;
  iv.hi = upper;
  report.intervals.push_back(iv);

  for (auto it = down_samples.rbegin(); it != down_samples.rend(); ++it) report.min_eig_samples.push_back(*it);
  report.min_eig_samples.insert(report.min_eig_samples.end(), up_samples.begin() + 1, up_samples.end());
  return report;
}

double recoupled_metric_boundary(double tol) {
  const ModelFamily family = registry_family(ModelName::Ec4Recoupled);
  const PositivityReport report = tracked_positivity_interval(family, 0.0, 1.2, tol);
  const PositivityInterval& iv = report.primary();
  if (!iv.hi_refined) throw NotFoundError("tracked metric stays positive up to t=1.2");
  return iv.hi;
}

}  // namespace ptlat
