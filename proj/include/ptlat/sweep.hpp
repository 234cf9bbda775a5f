// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

// Parameter sweeps. The OpenMP kernels and the serial reference return identical,
// index-keyed results; the serial versions are kept for testing and benchmarking.

#pragma once

#include <span>
#include <vector>

#include "ptlat/models.hpp"
#include "ptlat/spectrum.hpp"

namespace ptlat {

/// `steps` equally spaced points from lo to hi inclusive (lo + i * (hi - lo) / (steps - 1)).
std::vector<double> linear_grid(double lo, double hi, int steps);

std::vector<Spectrum> sweep_spectra(const ModelFamily& family, std::span<const double> grid);
std::vector<Spectrum> sweep_spectra_serial(const ModelFamily& family, std::span<const double> grid);

std::vector<int> sweep_real_counts(const ModelFamily& family, std::span<const double> grid,
                                   double eps_real = kDefaultEpsReal);
std::vector<int> sweep_real_counts_serial(const ModelFamily& family, std::span<const double> grid,
                                          double eps_real = kDefaultEpsReal);

}  // namespace ptlat
