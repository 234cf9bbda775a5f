// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/sweep.hpp"

#include <exception>

#include "ptlat/errors.hpp"

namespace ptlat {

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidSpec("grid needs at least one point");
  if (steps == 1) return {lo};
  std::vector<double> grid(steps);
  const double width = hi - lo;
  for (int i = 0; i < steps; ++i) grid[i] = lo + width * i / (steps - 1);
  grid.back() = hi;
  return grid;
}

std::vector<Spectrum> sweep_spectra_serial(const ModelFamily& family, std::span<const double> grid) {
  std::vector<Spectrum> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(eigenvalues(family.at(t)));
  return out;
}

std::vector<Spectrum> sweep_spectra(const ModelFamily& family, std::span<const double> grid) {
  const long n = static_cast<long>(grid.size());
  std::vector<Spectrum> out(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  // Points near exceptional points fall back to extended precision and cost far more.
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = eigenvalues(family.at(grid[i]));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // Report the lowest-index failure so the outcome does not depend on scheduling.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

std::vector<int> counts_of(const std::vector<Spectrum>& spectra, double eps_real) {
  std::vector<int> counts;
  counts.reserve(spectra.size());
  for (const auto& s : spectra) counts.push_back(count_real(s, eps_real));
  return counts;
}

}  // namespace

std::vector<int> sweep_real_counts(const ModelFamily& family, std::span<const double> grid,
                                   double eps_real) {
  return counts_of(sweep_spectra(family, grid), eps_real);
}

std::vector<int> sweep_real_counts_serial(const ModelFamily& family, std::span<const double> grid,
                                          double eps_real) {
  return counts_of(sweep_spectra_serial(family, grid), eps_real);
}

}  // namespace ptlat
