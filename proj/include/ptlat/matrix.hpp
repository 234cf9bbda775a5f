// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace ptlat {

/// Extended-precision scalar. Matrix entries are stored at this precision so that
/// spectra close to high-order exceptional points can be resolved.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<64, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

inline double to_double(const Real& x) { return x.convert_to<double>(); }

/// Immutable dense real square matrix.
///
/// Keeps both the extended-precision entries and their double rounding. Numerical
/// kernels work on `values()` and fall back to `precise()` when double precision
/// cannot resolve the answer.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(const Eigen::MatrixXd& values);
  explicit SquareMatrix(RealMatrix precise);

  static SquareMatrix identity(int n);
  static SquareMatrix diagonal(const Eigen::VectorXd& d);

  int size() const { return static_cast<int>(values_.rows()); }
  double operator()(int i, int j) const { return values_(i, j); }

  const Eigen::MatrixXd& values() const { return values_; }
  const RealMatrix& precise() const { return precise_; }

  SquareMatrix transpose() const;
  double trace() const;
  /// Frobenius norm.
  double norm() const { return values_.norm(); }

 private:
  RealMatrix precise_;
  Eigen::MatrixXd values_;
};

}  // namespace ptlat
