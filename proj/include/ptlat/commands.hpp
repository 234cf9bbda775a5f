// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

// The CLI subcommands as library calls. Each returns the full CSV text (header
// included) so that the command line in the header reproduces it byte for byte.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptlat/domain.hpp"
#include "ptlat/metric.hpp"
#include "ptlat/models.hpp"

namespace ptlat {

inline constexpr double kDefaultBoundaryTol = 1e-10;

struct SweepConfig {
  /// Registry key; ignored when config_path is set.
  std::string model;
  std::string config_path;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<int> steps;
  double eps_real = kDefaultEpsReal;
  double tol = kDefaultBoundaryTol;
  /// Real-eigenvalue count for `islands`.
  std::optional<int> k;
  /// Track a numeric metric even when a closed form is registered.
  bool numeric_metric = false;
  bool svg = false;
};

struct ReportBundle {
  std::string command;
  std::string csv;
  std::string svg;
  /// Warnings for stderr; not part of the CSV.
  std::vector<std::string> notices;

  std::vector<double> grid;
  std::vector<Spectrum> spectra;
  std::optional<DomainReport> domains;
  std::vector<EPLocation> exceptional_points;
  std::vector<DomainInterval> islands;
  std::optional<PositivityReport> positivity;
  /// False when `validate` found a failing check.
  bool ok = true;
};

/// Registry key or the family defined by config_path.
ModelFamily resolve_family(const SweepConfig& config);

ReportBundle cmd_spectrum(const SweepConfig& config);
ReportBundle cmd_domains(const SweepConfig& config);
ReportBundle cmd_metric(const SweepConfig& config);
ReportBundle cmd_islands(const SweepConfig& config);
ReportBundle cmd_ep(const SweepConfig& config);
ReportBundle cmd_validate(const SweepConfig& config);

}  // namespace ptlat
