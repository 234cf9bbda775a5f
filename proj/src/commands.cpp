// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ptlat/custom_model.hpp"
#include "ptlat/errors.hpp"
#include "ptlat/report.hpp"
#include "ptlat/sweep.hpp"

namespace ptlat {

namespace {

struct Resolved {
  ModelFamily family;
  ParameterRange range;
  int steps;
};

Resolved resolve(const SweepConfig& config, int default_steps_hint) {
  ModelFamily family = resolve_family(config);
  ParameterRange range = family.default_range();
  if (config.t_min) range.lo = *config.t_min;
  if (config.t_max) range.hi = *config.t_max;
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi)) throw InvalidSpec("--t-min and --t-max must be finite");
  if (!(range.lo < range.hi)) throw InvalidSpec("--t-min must be smaller than --t-max");
  if (!(config.eps_real > 0)) throw InvalidSpec("--eps-real must be positive");
  if (!(config.tol > 0)) throw InvalidSpec("--tol must be positive");
  const ParameterRange& valid = family.validity();
  if (range.lo < valid.lo || range.hi > valid.hi) {
    std::ostringstream os;
    os.precision(17);
    os << family.name() << ": range [" << range.lo << ", " << range.hi << "] leaves the validity range [" << valid.lo
       << ", " << valid.hi << "]";
    throw DomainError(os.str());
  }
  const int steps = config.steps.value_or(default_steps_hint > 0 ? default_steps_hint : default_coarse_steps(range));
  if (steps < 2) throw InvalidSpec("--steps must be at least 2");
  return {std::move(family), range, steps};
}

std::string command_line(const std::string& sub, const SweepConfig& config, const Resolved& r, bool with_steps) {
  std::ostringstream os;
  os << "ptlattice " << sub;
  if (!config.config_path.empty()) {
    os << " --config " << config.config_path;
  } else {
    os << " --model " << config.model;
  }
  os << " --t-min " << format_shortest(r.range.lo) << " --t-max " << format_shortest(r.range.hi);
  if (with_steps) os << " --steps " << r.steps;
  os << " --eps-real " << format_shortest(config.eps_real) << " --tol " << format_shortest(config.tol);
  if (config.k) os << " --k " << *config.k;
  if (config.numeric_metric) os << " --numeric";
  return os.str();
}

ReportBundle start(const std::string& sub, const SweepConfig& config, const Resolved& r, bool with_steps,
                   std::vector<std::pair<std::string, std::string>> extra = {}) {
  ReportBundle bundle;
  bundle.command = command_line(sub, config, r, with_steps);
  std::vector<std::pair<std::string, std::string>> settings{
      {"model", r.family.name()},
      {"eps_real", format_shortest(config.eps_real)},
      {"tol", format_shortest(config.tol)},
  };
  settings.insert(settings.end(), extra.begin(), extra.end());
  bundle.csv = csv_header(bundle.command, settings);
  return bundle;
}

void warn_narrow(ReportBundle& bundle, const std::vector<DomainInterval>& intervals, double step) {
  for (const auto& iv : intervals) {
    if (iv.hi - iv.lo < step) {
      bundle.notices.push_back("interval [" + format_double(iv.lo) + ", " + format_double(iv.hi) +
                               "] is narrower than the coarse grid step " + format_double(step) +
                               "; features of this size can be missed, consider more --steps");
    }
  }
}

}  // namespace

ModelFamily resolve_family(const SweepConfig& config) {
  if (!config.config_path.empty()) return load_custom_model(config.config_path).family();
  if (config.model.empty()) throw InvalidSpec("one of --model or --config is required");
  const auto name = parse_model_name(config.model);
  if (!name) {
    std::string keys;
    for (ModelName m : all_models()) keys += (keys.empty() ? "" : ", ") + std::string(model_key(m));
    throw InvalidSpec("--model: unknown model '" + config.model + "' (known: " + keys + ")");
  }
  return registry_family(*name);
}

ReportBundle cmd_spectrum(const SweepConfig& config) {
  const Resolved r = resolve(config, 401);
  ReportBundle bundle = start("spectrum", config, r, true);
  bundle.grid = linear_grid(r.range.lo, r.range.hi, r.steps);
  bundle.spectra = sweep_spectra(r.family, bundle.grid);
  bundle.csv += spectrum_csv(bundle.grid, bundle.spectra);
  if (config.svg) bundle.svg = spectrum_svg(bundle.grid, bundle.spectra, r.family.name() + " spectrum");
  return bundle;
}

ReportBundle cmd_domains(const SweepConfig& config) {
  const Resolved r = resolve(config, 0);
  DomainOptions options;
  options.eps_real = config.eps_real;
  ReportBundle bundle = start("domains", config, r, true);
  DomainReport report = domain_report(r.family, r.range, r.steps, config.tol, options);
  warn_narrow(bundle, report.intervals, report.grid_step);
  bundle.csv += domains_csv(report);
  bundle.exceptional_points = report.exceptional_points;
  bundle.domains = std::move(report);
  return bundle;
}

ReportBundle cmd_islands(const SweepConfig& config) {
  if (!config.k) throw InvalidSpec("islands needs --k");
  const Resolved r = resolve(config, 0);
  DomainOptions options;
  options.eps_real = config.eps_real;
  ReportBundle bundle = start("islands", config, r, true);
  bundle.islands = reality_islands(r.family, r.range, *config.k, r.steps, config.tol, options);
  warn_narrow(bundle, bundle.islands, (r.range.hi - r.range.lo) / (r.steps - 1));
  bundle.csv += islands_csv(bundle.islands, config.tol);
  return bundle;
}

ReportBundle cmd_ep(const SweepConfig& config) {
  const Resolved r = resolve(config, 2);
  ReportBundle bundle = start("ep", config, r, false);
  const int count_lo = count_real(eigenvalues(r.family.at(r.range.lo)), config.eps_real);
  const int count_hi = count_real(eigenvalues(r.family.at(r.range.hi)), config.eps_real);
  EPLocation ep;
  if (count_lo != count_hi) {
    ep.t_star = refine_reality_boundary(r.family, r.range.lo, r.range.hi, config.tol, config.eps_real);
    ep.kind = EpKind::Complexification;
    ep.order = std::max(2, degeneracy_order(r.family.at(ep.t_star), DomainOptions{}.cluster_tol));
    ep.residual = config.tol;
  } else {
    DomainOptions options;
    options.eps_real = config.eps_real;
    ep = locate_coalescence_ep(r.family, r.range.lo, r.range.hi, config.tol, options);
  }
  bundle.exceptional_points.push_back(ep);
  bundle.csv += ep_csv(bundle.exceptional_points);
  return bundle;
}

ReportBundle cmd_metric(const SweepConfig& config) {
  const Resolved r = resolve(config, 0);
  const auto name = config.config_path.empty() ? parse_model_name(config.model) : std::nullopt;

  std::optional<MetricCandidate> closed_form;
  if (!config.numeric_metric && name == ModelName::Ec4) closed_form = paper_metric_ec4_candidate();
  if (!config.numeric_metric && name == ModelName::Ec4StrongBond) closed_form = paper_metric_ec4_strong_candidate();

  const std::string provenance = to_string(closed_form ? closed_form->provenance : MetricProvenance::BasisCombination);
  ReportBundle bundle = start("metric", config, r, true, {{"metric", provenance}});
  PositivityReport report;
  if (closed_form) {
    report = positivity_interval(*closed_form, r.range.lo, r.range.hi, config.tol, r.steps);
  } else {
    const double step = (r.range.hi - r.range.lo) / (r.steps - 1);
    report = tracked_positivity_interval(r.family, r.range.lo, r.range.hi, config.tol, step);
  }
  if (report.empty()) bundle.notices.push_back("metric is positive definite nowhere in the scanned range");
  bundle.csv += positivity_csv(report);
  if (config.svg) {
    SvgSeries curve;
    std::vector<double> ts;
    for (const auto& [t, e] : report.min_eig_samples) {
      ts.push_back(t);
      curve.y.push_back(e);
    }
    bundle.svg = svg_plot(ts, {curve}, r.family.name() + " metric, smallest eigenvalue", "t");
  }
  bundle.positivity = std::move(report);
  return bundle;
}

ReportBundle cmd_validate(const SweepConfig& config) {
  const Resolved r = resolve(config, 101);
  ReportBundle bundle = start("validate", config, r, true);
  bundle.grid = linear_grid(r.range.lo, r.range.hi, r.steps);

  std::ostringstream os;
  os << "t,pt_defect,oracle_distance,trace_error,conjugate_error,phase\n";
  int failures = 0;
  for (double t : bundle.grid) {
    const SquareMatrix h = r.family.at(t);
    const double scale = std::max(1.0, h.norm());
    const Spectrum s = eigenvalues(h);
    const double defect = pt_defect(h);
    double oracle = std::numeric_limits<double>::quiet_NaN();
    if (h.size() <= 12) oracle = matched_distance(s, eigenvalues_charpoly_oracle(h));
    const double trace_error = std::abs(s.sum() - Complex(h.trace(), 0.0));
    const double conj_error = matched_distance(s, s.conjugate());

    std::string phase;
    bool ok = defect <= kStructuralTolerance * scale && !(oracle > 1e-8 * scale) &&
              trace_error <= kSpectralTolerance * scale && conj_error <= kSpectralTolerance * scale;
    if (defect > kStructuralTolerance * scale) {
      phase = "not-pt-symmetric";
    } else {
      try {
        phase = pt_phase(h, config.eps_real).value == PtPhaseKind::Unbroken ? "unbroken" : "broken";
      } catch (const DegeneracyError&) {
        phase = "near-degenerate";
      } catch (const ConsistencyError&) {
        phase = "inconsistent";
        ok = false;
      }
    }
    if (!ok) ++failures;
    os << format_double(t) << "," << format_double(defect) << "," << format_double(oracle) << ","
       << format_double(trace_error) << "," << format_double(conj_error) << "," << phase << "\n";
  }
  bundle.csv += os.str();
  bundle.ok = failures == 0;
  if (!bundle.ok) bundle.notices.push_back(std::to_string(failures) + " sample(s) failed validation");
  return bundle;
}

}  // namespace ptlat
