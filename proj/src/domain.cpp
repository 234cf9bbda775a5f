// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

#include "ptlat/errors.hpp"
#include "ptlat/sweep.hpp"

namespace ptlat {

namespace {

int real_count_at(const ModelFamily& family, double t, double eps_real) {
  return count_real(eigenvalues(family.at(t)), eps_real);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Union-find clusters of eigenvalues closer than `threshold`.
std::vector<int> cluster_labels(const Spectrum& s, double threshold) {
  std::vector<int> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (std::abs(s[i] - s[j]) <= threshold) parent[find(i)] = find(j);
  std::vector<int> labels(s.size());
  for (int i = 0; i < s.size(); ++i) labels[i] = find(i);
  return labels;
}

}  // namespace

const char* to_string(EpKind kind) {
  return kind == EpKind::Complexification ? "complexification" : "real-coalescence";
}

int default_coarse_steps(ParameterRange range) {
  const double width = range.hi - range.lo;
  if (!std::isfinite(width) || width < 0) throw InvalidSpec("coarse grid needs a finite range");
  return std::max(2, static_cast<int>(std::ceil(2000.0 * width)) + 1);
}

RealityProfile reality_profile(const ModelFamily& family, std::span<const double> grid,
                               double eps_real) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw InvalidSpec("reality_profile grid must be sorted");
  RealityProfile profile;
  profile.grid.assign(grid.begin(), grid.end());
  profile.counts = sweep_real_counts(family, grid, eps_real);
  return profile;
}

double refine_reality_boundary(const ModelFamily& family, double lo, double hi, double tol,
                               double eps_real) {
  if (!(tol > 0)) throw InvalidSpec("refinement tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  const int count_lo = real_count_at(family, lo, eps_real);
  const int count_hi = real_count_at(family, hi, eps_real);
  if (count_lo == count_hi) {
    throw InvalidBracket(family.name() + ": real count is " + std::to_string(count_lo) +
                         " at both ends of [" + fmt(lo) + ", " + fmt(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    if (real_count_at(family, mid, eps_real) == count_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

DegeneracyInfo degeneracy(const SquareMatrix& h, double tol, double rank_tol) {
  const Spectrum s = eigenvalues(h);
  DegeneracyInfo info;
  if (s.size() == 0) return info;
  const double scale = std::max(1.0, h.norm());
  const auto labels = cluster_labels(s, tol * scale);

  int best_label = labels[0];
  int best_size = 0;
  for (int label : labels) {
    const int size = static_cast<int>(std::count(labels.begin(), labels.end(), label));
    if (size > best_size) {
      best_size = size;
      best_label = label;
    }
  }
  Complex centre = 0.0;
  for (int i = 0; i < s.size(); ++i)
    if (labels[i] == best_label) centre += s[i];
  centre /= static_cast<double>(best_size);

  const int n = h.size();
  const Eigen::MatrixXcd shifted =
      h.values().cast<Complex>() - centre * Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * scale) ++rank;

  info.order = best_size;
  info.centre = centre;
  info.geometric_multiplicity = n - rank;
  return info;
}

int degeneracy_order(const SquareMatrix& h, double tol) { return degeneracy(h, tol).order; }

EPLocation locate_coalescence_ep(const ModelFamily& family, double lo, double hi, double tol,
                                 const DomainOptions& options) {
  if (!(tol > 0)) throw InvalidSpec("coalescence tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);

  double best_t = lo;
  double best_gap = std::numeric_limits<double>::infinity();
  auto gap_at = [&](double t) {
    const double g = min_pairwise_gap(eigenvalues(family.at(t)));
    if (g < best_gap) {
      best_gap = g;
      best_t = t;
    }
    return g;
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = gap_at(c);
  double gd = gap_at(d);
  while (b - a > tol) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = gap_at(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = gap_at(d);
    }
    if (!(c < d)) break;
  }

  const SquareMatrix h = family.at(best_t);
  const double scale = std::max(1.0, h.norm());
  if (best_gap > options.cluster_tol * scale) {
    throw NotFoundError(family.name() + ": smallest eigenvalue gap in [" + fmt(lo) + ", " + fmt(hi) +
                        "] is " + fmt(best_gap) + ", no coalescence");
  }

  const EigenDecomposition dec = eigen_decompose(h, true);
  int pi = 0, pj = 1;
  double closest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < h.size(); ++i) {
    for (int j = i + 1; j < h.size(); ++j) {
      const double dist = std::abs(dec.values[i] - dec.values[j]);
      if (dist < closest) {
        closest = dist;
        pi = i;
        pj = j;
      }
    }
  }
  const double angle = vector_angle(dec.vectors.col(pi), dec.vectors.col(pj));
  if (angle > options.angle_threshold) {
    throw NotFoundError(family.name() + ": eigenvalues meet near t=" + fmt(best_t) +
                        " but eigenvectors stay apart (angle " + fmt(angle) + ")");
  }

  EPLocation ep;
  ep.t_star = best_t;
  ep.order = std::max(2, degeneracy(h, options.cluster_tol).order);
  ep.residual = angle;
  const double probe = std::max(10.0 * tol, 1e-9);
  const ParameterRange& valid = family.validity();
  const double left = std::max(valid.lo, best_t - probe);
  const double right = std::min(valid.hi, best_t + probe);
  ep.kind = real_count_at(family, left, options.eps_real) == real_count_at(family, right, options.eps_real)
                ? EpKind::RealCoalescence
                : EpKind::Complexification;
  return ep;
}

DomainReport domain_report(const ModelFamily& family, ParameterRange range, int coarse_steps,
                           double tol, const DomainOptions& options) {
  if (coarse_steps < 2) throw InvalidSpec("domain_report needs at least 2 coarse steps");
  if (!(range.lo < range.hi)) throw InvalidSpec("domain_report needs lo < hi");
  if (!(tol > 0)) throw InvalidSpec("boundary tolerance must be positive");

  const auto grid = linear_grid(range.lo, range.hi, coarse_steps);
  const auto spectra = sweep_spectra(family, grid);
  std::vector<int> counts;
  for (const auto& s : spectra) counts.push_back(count_real(s, options.eps_real));

  DomainReport report;
  report.boundary_tol = tol;
  report.grid_step = grid[1] - grid[0];

  double start = range.lo;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (counts[i] == counts[i + 1]) continue;
    double boundary;
    try {
      boundary = refine_reality_boundary(family, grid[i], grid[i + 1], tol, options.eps_real);
    } catch (const InvalidBracket& e) {
      throw InvalidBracket(std::string(e.what()) + " while refining coarse cell " + std::to_string(i));
    }
    report.intervals.push_back({start, boundary, counts[i]});
    start = boundary;

    EPLocation ep;
    ep.t_star = boundary;
    ep.kind = EpKind::Complexification;
    ep.order = std::max(2, degeneracy(family.at(boundary), options.cluster_tol).order);
    ep.residual = tol;
    report.exceptional_points.push_back(ep);
  }
  report.intervals.push_back({start, range.hi, counts.back()});

  // Coalescences leave the count unchanged; look for deep local minima of the gap.
  std::vector<double> gaps;
  for (const auto& s : spectra) gaps.push_back(min_pairwise_gap(s));
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (!(gaps[i] <= gaps[i - 1] && gaps[i] <= gaps[i + 1])) continue;
    if (counts[i - 1] != counts[i] || counts[i + 1] != counts[i]) continue;
    const double scale = std::max(1.0, family.at(grid[i]).norm());
    if (gaps[i] > options.candidate_gap * scale) continue;
    try {
      const EPLocation ep = locate_coalescence_ep(family, grid[i - 1], grid[i + 1], tol, options);
      if (ep.kind != EpKind::RealCoalescence) continue;
      // Collisions between complex pairs also keep the count; only real-axis ones are markers.
      const SquareMatrix h = family.at(ep.t_star);
      const DegeneracyInfo info = degeneracy(h, options.cluster_tol);
      if (std::abs(info.centre.imag()) > options.cluster_tol * std::max(1.0, h.norm())) continue;
      const bool duplicate =
          std::any_of(report.exceptional_points.begin(), report.exceptional_points.end(),
                      [&](const EPLocation& other) { return std::abs(other.t_star - ep.t_star) <= report.grid_step; });
      if (!duplicate) report.exceptional_points.push_back(ep);
    } catch (const NotFoundError&) {
      // avoided crossing or diabolic point
    }
  }
  std::sort(report.exceptional_points.begin(), report.exceptional_points.end(),
            [](const EPLocation& a, const EPLocation& b) { return a.t_star < b.t_star; });
  return report;
}

std::vector<DomainInterval> reality_islands(const ModelFamily& family, ParameterRange range, int k,
                                            int coarse_steps, double tol, const DomainOptions& options) {
  if (k < 0 || k > family.dimension() || k % 2 != family.dimension() % 2) {
    throw InvalidSpec("island count k=" + std::to_string(k) + " must share the parity of n=" +
                      std::to_string(family.dimension()) + " and lie in [0, n]");
  }
  const DomainReport report = domain_report(family, range, coarse_steps, tol, options);
  std::vector<DomainInterval> islands;
  for (const auto& interval : report.intervals)
    if (interval.count_real == k) islands.push_back(interval);
  return islands;
}

}  // namespace ptlat
