// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/lattice.hpp"

#include <string>

#include "ptlat/errors.hpp"

namespace ptlat {

void LatticeSpec::validate() const {
  if (n < 1) throw InvalidSpec("lattice dimension must be positive, got " + std::to_string(n));
  if (static_cast<int>(diag.size()) != n) {
    throw InvalidSpec("expected " + std::to_string(n) + " diagonal entries, got " +
                      std::to_string(diag.size()));
  }
  const int couplings = topology == Topology::Open ? n - 1 : n;
  if (static_cast<int>(upper.size()) != couplings) {
    throw InvalidSpec("expected " + std::to_string(couplings) + " couplings for " +
                      (topology == Topology::Open ? "open chain" : "ring") + ", got " +
                      std::to_string(upper.size()));
  }
  if (topology == Topology::Ring && n % 2 != 0) {
    throw InvalidSpec("ring lattices need an even number of sites, got n=" + std::to_string(n));
  }
}

namespace {

RealMatrix chain_part(const LatticeSpec& spec) {
  RealMatrix h = RealMatrix::Zero(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i) h(i, i) = spec.diag[i];
  for (int i = 0; i + 1 < spec.n; ++i) {
    h(i, i + 1) = spec.upper[i];
    h(i + 1, i) = -spec.upper[i];
  }
  return h;
}

}  // namespace

SquareMatrix build_open_chain(const LatticeSpec& spec) {
  if (spec.topology != Topology::Open) throw InvalidSpec("build_open_chain needs an open topology");
  spec.validate();
  return SquareMatrix(chain_part(spec));
}

SquareMatrix build_ring(const LatticeSpec& spec) {
  if (spec.topology != Topology::Ring) throw InvalidSpec("build_ring needs a ring topology");
  spec.validate();
  RealMatrix h = chain_part(spec);
  const int last = spec.n - 1;
  // For n = 2 the closing bond lands on the same entries as c_1.
  h(0, last) -= spec.upper[last];
  h(last, 0) += spec.upper[last];
  return SquareMatrix(std::move(h));
}

SquareMatrix build_lattice(const LatticeSpec& spec) {
  return spec.topology == Topology::Open ? build_open_chain(spec) : build_ring(spec);
}

SquareMatrix parity(int n) {
  if (n < 1) throw InvalidSpec("parity dimension must be positive");
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = i % 2 == 0 ? 1.0 : -1.0;
  return SquareMatrix::diagonal(d);
}

double pt_defect(const SquareMatrix& h) {
  const Eigen::MatrixXd& a = h.values();
  const Eigen::MatrixXd p = parity(h.size()).values();
  return (a.transpose() * p - p * a).cwiseAbs().maxCoeff();
}

bool is_pt_symmetric(const SquareMatrix& h, double eps) {
  if (h.size() == 0) return true;
  return pt_defect(h) <= eps;
}

}  // namespace ptlat
