// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

// User-defined lattice families read from a YAML document:
//
//   name: my-ring            # optional
//   n: 4
//   topology: ring           # or open
//   diag:  [-3, -1, 1, 3]
//   upper: [t, t, t, "3*t/2"]
//   t_range: [-1.6, 1.6]     # required when an entry uses sqrt or '/'
//   metric_anchor: 0         # optional, defaults to the middle of t_range
//
// Entries are expressions in t (see expression.hpp). Ring documents need an even n
// and n couplings; open chains need n - 1.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ptlat/expression.hpp"
#include "ptlat/models.hpp"

namespace ptlat {

struct CustomModelSpec {
  std::string name;
  int n = 0;
  Topology topology = Topology::Open;
  std::vector<Expression> diag;
  std::vector<Expression> upper;
  ParameterRange validity;
  bool explicit_range = false;
  double metric_anchor = 0.0;

  LatticeSpec evaluate(double t) const;
  ModelFamily family() const;
};

/// Throws ParseError (with document line/column) and InvalidSpec.
CustomModelSpec parse_custom_model(const std::string& document, const std::string& source = "<config>");
CustomModelSpec load_custom_model(const std::filesystem::path& path);

}  // namespace ptlat
