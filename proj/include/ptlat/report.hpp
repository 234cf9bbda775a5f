// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptlat/domain.hpp"
#include "ptlat/metric.hpp"
#include "ptlat/spectrum.hpp"

namespace ptlat {

/// Fixed 17 significant digits ("%.17g").
std::string format_double(double x);
/// Shortest text that parses back to the same double.
std::string format_shortest(double x);

/// Comment lines that open every CSV: version, the command that reproduces the
/// file, then `key: value` settings.
std::string csv_header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& settings);

/// t, re_1..re_n, im_1..im_n.
std::string spectrum_csv(const std::vector<double>& grid, const std::vector<Spectrum>& spectra);

/// lo, hi, count_real, boundary_tol; then a blank line and t_star, order, kind, residual.
std::string domains_csv(const DomainReport& report);

std::string islands_csv(const std::vector<DomainInterval>& islands, double tol);

std::string ep_csv(const std::vector<EPLocation>& eps);

/// t, min_eig; then a blank line and lo, hi, lo_refined, hi_refined.
std::string positivity_csv(const PositivityReport& report);

struct SvgSeries {
  std::vector<double> y;
  bool dashed = false;
  int colour = 0;
};

/// Static line plot: axes with end labels and one polyline per series.
std::string svg_plot(const std::vector<double>& x, const std::vector<SvgSeries>& series, const std::string& title,
                     const std::string& x_label);

/// Real parts solid, imaginary parts dashed.
std::string spectrum_svg(const std::vector<double>& grid, const std::vector<Spectrum>& spectra,
                         const std::string& title);

}  // namespace ptlat
