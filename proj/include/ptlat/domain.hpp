// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "ptlat/models.hpp"
#include "ptlat/spectrum.hpp"

namespace ptlat {

struct RealityProfile {
  std::vector<double> grid;
  std::vector<int> counts;
};

enum class EpKind { Complexification, RealCoalescence };

const char* to_string(EpKind kind);

/// An exceptional point. `residual` is the final bracket width for
/// complexification points and the eigenvector angle for coalescences.
struct EPLocation {
  double t_star = 0.0;
  int order = 0;
  EpKind kind = EpKind::Complexification;
  double residual = 0.0;
};

struct DomainInterval {
  double lo = 0.0;
  double hi = 0.0;
  int count_real = 0;
};

struct DomainReport {
  /// Disjoint, ordered, tiling the scanned range.
  std::vector<DomainInterval> intervals;
  std::vector<EPLocation> exceptional_points;
  double boundary_tol = 0.0;
  double grid_step = 0.0;
};

struct DomainOptions {
  double eps_real = kDefaultEpsReal;
  /// Single-linkage threshold for eigenvalue clusters, relative to max(1, ||H||).
  double cluster_tol = 1e-4;
  /// Eigenvector angle (radians) that confirms a coalescence.
  double angle_threshold = 1e-4;
  /// Coarse-grid gap minima below this (relative to max(1, ||H||)) are examined
  /// as coalescence candidates.
  double candidate_gap = 1e-2;
};

/// 2001 samples per unit of t, at least 2.
int default_coarse_steps(ParameterRange range);

/// count_real at each grid point. `grid` must be sorted and inside the family's validity.
RealityProfile reality_profile(const ModelFamily& family, std::span<const double> grid,
                               double eps_real = kDefaultEpsReal);

/// Bisection on the real-eigenvalue count; returns the midpoint of a bracket of width <= tol.
/// Throws InvalidBracket when the counts at lo and hi agree.
double refine_reality_boundary(const ModelFamily& family, double lo, double hi, double tol,
                               double eps_real = kDefaultEpsReal);

struct DegeneracyInfo {
  /// Size of the largest eigenvalue cluster.
  int order = 1;
  Complex centre;
  /// n - rank(H - centre I); 1 means a single Jordan block for that cluster.
  int geometric_multiplicity = 1;
};

DegeneracyInfo degeneracy(const SquareMatrix& h, double tol, double rank_tol = 1e-8);
int degeneracy_order(const SquareMatrix& h, double tol);

/// Golden-section search for the minimum of the smallest eigenvalue gap in [lo, hi],
/// confirmed by the angle between the coalescing eigenvectors.
/// Throws NotFoundError when no confirmed coalescence lies in the bracket.
EPLocation locate_coalescence_ep(const ModelFamily& family, double lo, double hi, double tol,
                                 const DomainOptions& options = {});

DomainReport domain_report(const ModelFamily& family, ParameterRange range, int coarse_steps,
                           double tol, const DomainOptions& options = {});

/// Maximal intervals on which exactly k eigenvalues are real.
std::vector<DomainInterval> reality_islands(const ModelFamily& family, ParameterRange range, int k,
                                            int coarse_steps, double tol,
                                            const DomainOptions& options = {});

}  // namespace ptlat
