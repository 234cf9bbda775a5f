// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

// Characteristic-polynomial route to eigenvalues. Shares no code with the QR
// eigensolver so the two can cross-check each other.

#pragma once

#include <complex>
#include <vector>

#include "ptlat/matrix.hpp"

namespace ptlat {

using RealComplex = std::complex<Real>;

/// Upper Hessenberg matrix similar to `a`, by Gaussian elimination with row pivoting.
RealMatrix hessenberg_similarity(const RealMatrix& a);

/// Coefficients c_0..c_n of det(lambda I - a) = sum c_k lambda^k (c_n = 1).
std::vector<Real> characteristic_polynomial(const RealMatrix& a);

/// All complex roots of sum c_k z^k (Aberth-Ehrlich iteration).
/// Throws SolverError when the iteration stagnates.
std::vector<RealComplex> polynomial_roots(const std::vector<Real>& coeffs, int max_iterations = 20000);

}  // namespace ptlat
