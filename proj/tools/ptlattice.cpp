// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "ptlat/commands.hpp"
#include "ptlat/errors.hpp"

namespace {

// Exit codes: 0 success, 2 usage, 3 domain/validity, 4 numerical failure.
constexpr int kUsage = 2;
constexpr int kDomain = 3;
constexpr int kNumerical = 4;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ptlat::InvalidSpec("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, reality domains, exceptional points and metrics of PT-symmetric lattices"};
  app.require_subcommand(1);

  ptlat::SweepConfig config;
  std::string out_path;
  std::string svg_path;

  using Command = std::function<ptlat::ReportBundle(const ptlat::SweepConfig&)>;
  std::map<CLI::App*, Command> commands;

  auto add = [&](const std::string& name, const std::string& help, Command run) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* model = sub->add_option("--model", config.model, "registry model (mdg6-open, mdg6-w1, mdg6-w2, ec4, ec4-strongbond, ec4-recoupled)");
    auto* cfg = sub->add_option("--config", config.config_path, "YAML file defining a custom lattice")->check(CLI::ExistingFile);
    model->excludes(cfg);
    sub->add_option("--t-min", config.t_min, "lower end of the t range");
    sub->add_option("--t-max", config.t_max, "upper end of the t range");
    sub->add_option("--steps", config.steps, "number of grid points");
    sub->add_option("--eps-real", config.eps_real, "reality tolerance relative to max(1, spectral radius)");
    sub->add_option("--tol", config.tol, "refinement tolerance in t");
    sub->add_option("--out", out_path, "CSV output file (default: stdout)");
    sub->add_option("--svg", svg_path, "SVG output file");
    commands[sub] = std::move(run);
    return sub;
  };

  add("spectrum", "eigenvalues along a t grid", ptlat::cmd_spectrum);
  add("domains", "reality-count intervals and exceptional points", ptlat::cmd_domains);
  add("metric", "positivity interval of a metric family", ptlat::cmd_metric)
      ->add_flag("--numeric", config.numeric_metric, "track a numeric metric even when a closed form exists");
  add("islands", "intervals with exactly k real eigenvalues", ptlat::cmd_islands)
      ->add_option("--k", config.k, "number of real eigenvalues")
      ->required();
  add("ep", "locate one exceptional point inside [t-min, t-max]", ptlat::cmd_ep);
  add("validate", "structural and spectral self-checks along a grid", ptlat::cmd_validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }
  config.svg = !svg_path.empty();

  try {
    ptlat::ReportBundle bundle;
    for (auto& [sub, run] : commands)
      if (sub->parsed()) bundle = run(config);

    for (const auto& note : bundle.notices) std::cerr << "warning: " << note << "\n";
    if (out_path.empty()) {
      std::cout << bundle.csv;
    } else {
      write_file(out_path, bundle.csv);
    }
    if (config.svg) {
      if (bundle.svg.empty()) {
        std::cerr << "warning: this command has no plot; --svg ignored\n";
      } else {
        write_file(svg_path, bundle.svg);
      }
    }
    return bundle.ok ? 0 : kNumerical;
  } catch (const ptlat::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ptlat::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const ptlat::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
