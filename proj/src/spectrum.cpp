// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "ptlat/charpoly.hpp"
#include "ptlat/errors.hpp"
#include "ptlat/lattice.hpp"
#include "ptlat/matching.hpp"

namespace ptlat {

namespace {

constexpr int kMaxEigenDimension = 64;
constexpr int kMaxOracleDimension = 12;
// Double-precision eigenvalues are accepted when kappa * 4 eps * max(1, ||H||)
// stays below this fraction of max(1, ||H||).
constexpr double kAccuracyTarget = 1e-12;

bool spectral_order(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<int> spectral_permutation(const std::vector<Complex>& values) {
  std::vector<int> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return spectral_order(values[a], values[b]); });
  return order;
}

bool double_result_trusted(const Eigen::MatrixXd& a, const Eigen::EigenSolver<Eigen::MatrixXd>& es) {
  if (es.info() != Eigen::Success) return false;
  const Eigen::MatrixXcd v = es.eigenvectors();
  if (!v.allFinite()) return false;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible()) return false;
  const Eigen::MatrixXcd w = lu.inverse();
  double kappa = 0.0;
  for (Eigen::Index i = 0; i < v.cols(); ++i) kappa = std::max(kappa, w.row(i).norm() * v.col(i).norm());
  const double scale = std::max(1.0, a.norm());
  const double estimate = kappa * 4.0 * std::numeric_limits<double>::epsilon() * scale;
  return std::isfinite(estimate) && estimate <= kAccuracyTarget * scale;
}

EigenDecomposition decompose_extended(const SquareMatrix& h, bool with_vectors) {
  Eigen::EigenSolver<RealMatrix> es(h.precise(), with_vectors);
  if (es.info() != Eigen::Success) {
    throw SolverError("extended-precision Schur iteration did not converge for a " +
                          std::to_string(h.size()) + "x" + std::to_string(h.size()) + " matrix",
                      es.getMaxIterations() * h.size());
  }
  EigenDecomposition out;
  out.extended_precision = true;
  const auto& ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    out.values.emplace_back(to_double(ev(i).real()), to_double(ev(i).imag()));
  if (with_vectors) {
    const auto vec = es.eigenvectors();
    out.vectors.resize(vec.rows(), vec.cols());
    for (Eigen::Index j = 0; j < vec.cols(); ++j) {
      for (Eigen::Index i = 0; i < vec.rows(); ++i)
        out.vectors(i, j) = Complex(to_double(vec(i, j).real()), to_double(vec(i, j).imag()));
      out.vectors.col(j).normalize();
    }
  }
  return out;
}

// Scales v to unit norm with its first non-negligible component real and positive.
Eigen::VectorXcd normalize_right(Eigen::VectorXcd v) {
  v.normalize();
  const double cutoff = 1e-8 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > cutoff) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex(v(i).real(), 0.0);
      break;
    }
  }
  return v;
}

}  // namespace

Spectrum::Spectrum(std::vector<Complex> values) : values_(std::move(values)) {
  std::stable_sort(values_.begin(), values_.end(), spectral_order);
}

Complex Spectrum::sum() const {
  Complex s = 0.0;
  for (const auto& v : values_) s += v;
  return s;
}

double Spectrum::radius() const {
  double r = 0.0;
  for (const auto& v : values_) r = std::max(r, std::abs(v));
  return r;
}

Spectrum Spectrum::conjugate() const {
  std::vector<Complex> c;
  c.reserve(values_.size());
  for (const auto& v : values_) c.push_back(std::conj(v));
  return Spectrum(std::move(c));
}

bool Spectrum::is_conjugate_closed(double tol) const {
  return matched_distance(*this, conjugate()) <= tol;
}

EigenDecomposition eigen_decompose(const SquareMatrix& h, bool with_vectors) {
  const int n = h.size();
  if (n > kMaxEigenDimension) {
    throw InvalidSpec("dense eigensolver limited to n <= " + std::to_string(kMaxEigenDimension));
  }
  if (n == 0) return {};

  Eigen::EigenSolver<Eigen::MatrixXd> es(h.values(), true);
  if (!double_result_trusted(h.values(), es)) return decompose_extended(h, with_vectors);

  EigenDecomposition out;
  const auto& ev = es.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  if (with_vectors) {
    out.vectors = es.eigenvectors();
    for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) out.vectors.col(j).normalize();
  }
  return out;
}

Spectrum eigenvalues(const SquareMatrix& h) { return Spectrum(eigen_decompose(h, false).values); }

Spectrum eigenvalues_charpoly_oracle(const SquareMatrix& h) {
  if (h.size() > kMaxOracleDimension) {
    throw InvalidSpec("characteristic-polynomial oracle limited to n <= " +
                      std::to_string(kMaxOracleDimension));
  }
  const auto coeffs = characteristic_polynomial(h.precise());
  const auto roots = polynomial_roots(coeffs);
  std::vector<Complex> values;
  values.reserve(roots.size());
  for (const auto& z : roots) values.emplace_back(to_double(z.real()), to_double(z.imag()));
  return Spectrum(std::move(values));
}

double matched_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const int n = a.size();
  if (n == 0) return 0.0;
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost(i, j) = std::abs(a[i] - b[j]);
  const auto assignment = min_cost_assignment(cost);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, cost(i, assignment[i]));
  return worst;
}

std::vector<EigenPair> left_right_pairs(const SquareMatrix& h) {
  const int n = h.size();
  const EigenDecomposition right = eigen_decompose(h, true);
  const Spectrum spectrum(right.values);
  const double gap_floor = kGapFactor * h.norm();
  if (n > 1 && !(min_pairwise_gap(spectrum) > gap_floor)) {
    throw DegeneracyError("eigenvalue gap " + std::to_string(min_pairwise_gap(spectrum)) +
                          " below non-degeneracy threshold " + std::to_string(gap_floor));
  }
  const EigenDecomposition transposed = eigen_decompose(h.transpose(), true);

  std::vector<EigenPair> pairs;
  pairs.reserve(n);
  for (int k : spectral_permutation(right.values)) {
    const Complex lambda = right.values[k];
    // l^H H = lambda l^H  <=>  H^T l = conj(lambda) l for real H.
    int best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(transposed.values[j] - std::conj(lambda));
      if (d < best_distance) {
        best_distance = d;
        best = j;
      }
    }
    EigenPair pair;
    pair.value = lambda;
    pair.right = normalize_right(right.vectors.col(k));
    pair.left = transposed.vectors.col(best);
    const Complex overlap = pair.left.dot(pair.right);  // l^H r
    if (std::abs(overlap) == 0.0) {
      throw DegeneracyError("left and right eigenvectors are orthogonal (exceptional point)");
    }
    pair.left /= std::conj(overlap);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

int count_real(const Spectrum& s, double eps_real) {
  const double threshold = eps_real * std::max(1.0, s.radius());
  int upper_half = 0;
  for (const auto& v : s)
    if (v.imag() > threshold) ++upper_half;
  return s.size() - 2 * upper_half;
}

PtPhase pt_phase(const SquareMatrix& h, double eps_real) {
  if (pt_defect(h) > 1e-10 * std::max(1.0, h.norm())) {
    throw InvalidSpec("pt_phase requires a PT-symmetric matrix (H^T P = P H)");
  }
  const auto pairs = left_right_pairs(h);
  const Eigen::MatrixXd p = parity(h.size()).values();

  std::vector<Complex> values;
  for (const auto& pair : pairs) values.push_back(pair.value);
  const Spectrum spectrum(values);
  const double threshold = eps_real * std::max(1.0, spectrum.radius());

  PtPhase phase{PtPhaseKind::Unbroken, {}};
  for (const auto& pair : pairs) {
    const Eigen::VectorXcd pr = p.cast<Complex>() * pair.right;
    const double defect = std::sin(vector_angle(pr, pair.left));
    phase.defects.push_back(defect);
    const bool real = std::abs(pair.value.imag()) <= threshold;
    const bool proportional = defect <= kProportionalityTolerance;
    if (real != proportional) {
      throw ConsistencyError("eigenvalue (" + std::to_string(pair.value.real()) + ", " +
                             std::to_string(pair.value.imag()) + ") has proportionality defect " +
                             std::to_string(defect) + " inconsistent with its reality");
    }
  }
  if (count_real(spectrum, eps_real) != h.size()) phase.value = PtPhaseKind::Broken;
  return phase;
}

double min_pairwise_gap(const Spectrum& s) {
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) gap = std::min(gap, std::abs(s[i] - s[j]));
  return gap;
}

double vector_angle(const Eigen::VectorXcd& a_in, const Eigen::VectorXcd& b_in) {
  const Eigen::VectorXcd a = a_in.normalized();
  Eigen::VectorXcd b = b_in.normalized();
  const Complex c = a.dot(b);
  if (std::abs(c) == 0.0) return M_PI / 2;
  b *= std::conj(c) / std::abs(c);
  // |a - b| = 2 sin(theta / 2) once the phases are aligned; accurate for tiny angles.
  const double chord = std::min(2.0, (a - b).norm());
  return std::min(M_PI / 2, 2.0 * std::asin(chord / 2.0));
}

Spectrum ec4_closed_form(double t) {
  const Complex r = std::sqrt(Complex(9.0 - 4.0 * t * t, 0.0));
  return Spectrum({-r, Complex(-1.0), Complex(1.0), r});
}

Ec4PairVectors ec4_pair_vectors(double t) {
  if (t == 0.0) throw DomainError("ec4_pair_vectors: last component of psi3 divides by t (t=0)");
  if (std::abs(t) > 1.5) throw DomainError("ec4_pair_vectors: requires |t| <= 3/2");
  const double r = std::sqrt(std::max(0.0, 9.0 - 4.0 * t * t));
  const double t2 = t * t;
  Ec4PairVectors v;
  v.psi2 = Eigen::Vector4d(0.0, t, 2.0, t);
  v.psi3 = Eigen::Vector4d(t2 - 2.0, (r + 1.0) * t / 2.0, 3.0 - t2 + r,
                           ((4.0 - t2) * r + 12.0 - 5.0 * t2) / (2.0 * t));
  return v;
}

}  // namespace ptlat
