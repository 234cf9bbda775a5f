// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "ptlat/matrix.hpp"

namespace ptlat {

using Complex = std::complex<double>;

/// Default reality tolerance, relative to max(1, spectral radius).
inline constexpr double kDefaultEpsReal = 1e-9;
/// Minimal eigenvalue gap, relative to ||H||, below which a spectrum counts as degenerate.
inline constexpr double kGapFactor = 1e-7;
/// Residual bound for eigenpairs, relative to ||H||.
inline constexpr double kSpectralTolerance = 1e-10;
/// Upper bound on sin(angle(P R_n, L_n)) for an eigenvalue to count as PT-proportional.
inline constexpr double kProportionalityTolerance = 1e-6;

/// Eigenvalues sorted by real part, then imaginary part.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](int i) const { return values_[i]; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  Complex sum() const;
  /// max |lambda|.
  double radius() const;
  Spectrum conjugate() const;
  /// Conjugation permutes the spectrum up to `tol` (after optimal matching).
  bool is_conjugate_closed(double tol) const;

 private:
  std::vector<Complex> values_;
};

/// Output of the adaptive eigensolver. Columns of `vectors` are unit-norm right
/// eigenvectors in the order of `values` (empty unless requested).
struct EigenDecomposition {
  std::vector<Complex> values;
  Eigen::MatrixXcd vectors;
  /// True when the double-precision result was not trusted and the extended
  /// precision entries were diagonalised instead.
  bool extended_precision = false;
};

/// Dense non-symmetric eigensolver. Runs in double precision and re-solves on the
/// extended-precision entries when the eigenvalue condition numbers say the double
/// result could be off by more than ~1e-12 ||H||. Throws SolverError on non-convergence.
EigenDecomposition eigen_decompose(const SquareMatrix& h, bool with_vectors);

/// All eigenvalues (n <= 64).
Spectrum eigenvalues(const SquareMatrix& h);

/// Independent check: characteristic polynomial through a Hessenberg recursion,
/// then polynomial root finding (n <= 12).
Spectrum eigenvalues_charpoly_oracle(const SquareMatrix& h);

/// Largest distance between matched eigenvalues under the minimum-cost matching.
double matched_distance(const Spectrum& a, const Spectrum& b);

/// Right/left eigenvectors: H r = lambda r, l^H H = lambda l^H, with l^H r = 1.
struct EigenPair {
  Complex value;
  Eigen::VectorXcd right;
  Eigen::VectorXcd left;
};

/// Biorthonormal eigenpairs sorted like Spectrum. Right vectors have unit norm and
/// a positive real first non-negligible component. Throws DegeneracyError when the
/// minimal eigenvalue gap is below kGapFactor * ||H||.
std::vector<EigenPair> left_right_pairs(const SquareMatrix& h);

/// Number of eigenvalues with |Im| <= eps_real * max(1, radius); always has the parity of n.
int count_real(const Spectrum& s, double eps_real = kDefaultEpsReal);

enum class PtPhaseKind { Unbroken, Broken };

struct PtPhase {
  PtPhaseKind value;
  /// sin(angle(P R_n, L_n)) per eigenvalue, in Spectrum order.
  std::vector<double> defects;
};

/// Classifies the PT phase by reality of the spectrum and cross-checks it against
/// the proportionality of P R_n and L_n. Throws ConsistencyError if they disagree.
PtPhase pt_phase(const SquareMatrix& h, double eps_real = kDefaultEpsReal);

/// min |lambda_i - lambda_j| over i != j (infinity for n < 2).
double min_pairwise_gap(const Spectrum& s);

/// Angle in [0, pi/2] between the complex lines spanned by a and b.
double vector_angle(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/// E = -sqrt(9 - 4t^2), -1, 1, sqrt(9 - 4t^2) for the equal-coupling ring.
Spectrum ec4_closed_form(double t);

struct Ec4PairVectors {
  Eigen::VectorXd psi2;  ///< eigenvalue 1
  Eigen::VectorXd psi3;  ///< eigenvalue sqrt(9 - 4t^2)
};

/// Closed-form eigenvectors that coalesce at t = +-sqrt(2). Requires 0 < |t| <= 3/2.
Ec4PairVectors ec4_pair_vectors(double t);

}  // namespace ptlat
