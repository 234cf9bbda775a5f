// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/charpoly.hpp"

#include <boost/math/constants/constants.hpp>

#include "ptlat/errors.hpp"

namespace ptlat {

namespace {

Real cabs(const RealComplex& z) { return sqrt(z.real() * z.real() + z.imag() * z.imag()); }

// p(z) and p'(z) by Horner.
std::pair<RealComplex, RealComplex> horner(const std::vector<Real>& c, const RealComplex& z) {
  RealComplex p(c.back()), dp(0);
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + RealComplex(c[k]);
  }
  return {p, dp};
}

}  // namespace

RealMatrix hessenberg_similarity(const RealMatrix& input) {
  RealMatrix a = input;
  const Eigen::Index n = a.rows();
  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    Real pivot = 0;
    Eigen::Index row = m;
    for (Eigen::Index j = m; j < n; ++j) {
      if (abs(a(j, m - 1)) > abs(pivot)) {
        pivot = a(j, m - 1);
        row = j;
      }
    }
    if (row != m) {
      a.row(row).swap(a.row(m));
      a.col(row).swap(a.col(m));
    }
    if (pivot == 0) continue;
    for (Eigen::Index i = m + 1; i < n; ++i) {
      Real y = a(i, m - 1);
      if (y == 0) continue;
      y /= pivot;
      // Row operation E and its inverse column operation keep the similarity.
      for (Eigen::Index j = m - 1; j < n; ++j) a(i, j) -= y * a(m, j);
      for (Eigen::Index j = 0; j < n; ++j) a(j, m) += y * a(j, i);
      a(i, m - 1) = 0;
    }
  }
  return a;
}

std::vector<Real> characteristic_polynomial(const RealMatrix& input) {
  const int n = static_cast<int>(input.rows());
  const RealMatrix h = hessenberg_similarity(input);

  // p[k] holds det(lambda I - H[0:k, 0:k]) as coefficients, lowest degree first.
  std::vector<std::vector<Real>> p(n + 1);
  p[0] = {Real(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<Real> next(k + 1, Real(0));
    const Real diag = h(k - 1, k - 1);
    for (int d = 0; d < k; ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= diag * p[k - 1][d];
    }
    Real subdiag_product = 1;
    for (int i = k - 1; i >= 1; --i) {
      subdiag_product *= h(i, i - 1);
      const Real factor = h(i - 1, k - 1) * subdiag_product;
      if (factor == 0) continue;
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) next[d] -= factor * p[i - 1][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::vector<RealComplex> polynomial_roots(const std::vector<Real>& coeffs_in, int max_iterations) {
  std::vector<Real> c = coeffs_in;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw InvalidSpec("zero polynomial has no isolated roots");
  const int degree = static_cast<int>(c.size()) - 1;
  if (degree == 0) return {};
  const Real lead = c.back();
  for (auto& x : c) x /= lead;
  if (degree == 1) return {RealComplex(-c[0])};

  // Cauchy bound on root moduli.
  Real radius = 0;
  for (int k = 0; k < degree; ++k) radius = std::max(radius, Real(abs(c[k])));
  radius = 1 + radius;
  const Real centre = -c[degree - 1] / degree;
  Real spread = 0;
  for (int k = 0; k < degree; ++k) spread = std::max(spread, Real(abs(c[k])));
  spread = std::min(radius, pow(spread + Real(1e-30), Real(1) / degree)) / 2 + Real(1e-3);

  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<RealComplex> z(degree);
  for (int k = 0; k < degree; ++k) {
    const Real angle = two_pi * k / degree + Real(0.4);
    z[k] = RealComplex(centre + spread * cos(angle), spread * sin(angle));
  }

  const Real eps = Real(1e-45);
  for (int iter = 1; iter <= max_iterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < degree; ++k) {
      const auto [p, dp] = horner(c, z[k]);
      if (cabs(p) == 0) continue;
      RealComplex repulsion(0);
      for (int j = 0; j < degree; ++j) {
        if (j == k) continue;
        RealComplex diff = z[k] - z[j];
        if (cabs(diff) == 0) diff = RealComplex(Real(1e-50), Real(1e-50));
        repulsion += RealComplex(1) / diff;
      }
      RealComplex step;
      if (cabs(dp) == 0) {
        step = RealComplex(Real(1e-20), Real(1e-20));
      } else {
        const RealComplex ratio = p / dp;
        step = ratio / (RealComplex(1) - ratio * repulsion);
      }
      z[k] -= step;
      if (cabs(step) > eps * std::max(Real(1), cabs(z[k]))) converged = false;
    }
    if (converged) return z;
  }
  throw SolverError("Aberth iteration stagnated for degree-" + std::to_string(degree) + " polynomial",
                    max_iterations);
}

}  // namespace ptlat
