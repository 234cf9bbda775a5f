// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ptlat/matrix.hpp"

namespace ptlat {

enum class Topology { Open, Ring };

/// Nearest-neighbour lattice with antisymmetric hopping.
///
/// Site energies go on the diagonal; coupling c_i sits at (i, i+1) and -c_i at
/// (i+1, i). A ring adds the closing bond c_n as -c_n at (1, n) and +c_n at (n, 1).
struct LatticeSpec {
  int n = 0;
  std::vector<Real> diag;
  /// n-1 couplings for Open, n for Ring.
  std::vector<Real> upper;
  Topology topology = Topology::Open;

  /// Throws InvalidSpec on length mismatch, n < 1, or odd-n rings.
  void validate() const;
};

SquareMatrix build_open_chain(const LatticeSpec& spec);
SquareMatrix build_ring(const LatticeSpec& spec);
/// Dispatches on spec.topology.
SquareMatrix build_lattice(const LatticeSpec& spec);

/// diag(+1, -1, +1, ...).
SquareMatrix parity(int n);

inline constexpr double kStructuralTolerance = 1e-12;

/// max |H^T P - P H|.
double pt_defect(const SquareMatrix& h);

bool is_pt_symmetric(const SquareMatrix& h, double eps = kStructuralTolerance);

}  // namespace ptlat
