// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/matrix.hpp"

#include <cmath>

#include "ptlat/errors.hpp"

namespace ptlat {

namespace {

void check_shape_and_values(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw InvalidSpec("matrix is not square: " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw InvalidSpec("matrix has non-finite entries");
}

}  // namespace

SquareMatrix::SquareMatrix(const Eigen::MatrixXd& values) : values_(values) {
  check_shape_and_values(values_);
  precise_ = values_.cast<Real>();
}

SquareMatrix::SquareMatrix(RealMatrix precise) : precise_(std::move(precise)) {
  values_.resize(precise_.rows(), precise_.cols());
  for (Eigen::Index i = 0; i < precise_.rows(); ++i)
    for (Eigen::Index j = 0; j < precise_.cols(); ++j) values_(i, j) = to_double(precise_(i, j));
  check_shape_and_values(values_);
}

SquareMatrix SquareMatrix::identity(int n) {
  return SquareMatrix(Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n)));
}

SquareMatrix SquareMatrix::diagonal(const Eigen::VectorXd& d) {
  return SquareMatrix(Eigen::MatrixXd(d.asDiagonal()));
}

SquareMatrix SquareMatrix::transpose() const {
  return SquareMatrix(RealMatrix(precise_.transpose()));
}

double SquareMatrix::trace() const { return values_.trace(); }

}  // namespace ptlat
