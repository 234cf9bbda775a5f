// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptlat/lattice.hpp"

namespace ptlat {

enum class ModelName { Mdg6Open, Mdg6W1, Mdg6W2, Ec4, Ec4StrongBond, Ec4Recoupled };

struct ModelId {
  ModelName name;
  double t;
};

/// Closed interval of admissible parameters; either end may be infinite.
struct ParameterRange {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double t) const { return t >= lo && t <= hi; }
};

const std::vector<ModelName>& all_models();
/// CLI key, e.g. "ec4-strongbond".
std::string_view model_key(ModelName name);
std::optional<ModelName> parse_model_name(std::string_view key);

/// Lattice data of a registry model at parameter t, evaluated from closed forms.
LatticeSpec registry_spec(ModelId id);
SquareMatrix registry_model(ModelId id);

/// A one-parameter family t -> H(t) together with the metadata the sweeps need.
class ModelFamily {
 public:
  using Builder = std::function<SquareMatrix(double)>;

  ModelFamily(std::string name, int dimension, ParameterRange validity, Builder build);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  const ParameterRange& validity() const { return validity_; }

  /// Throws DomainError outside validity().
  SquareMatrix at(double t) const;

  /// Range swept when the caller gives none.
  ParameterRange default_range() const { return default_range_; }
  ModelFamily& with_default_range(ParameterRange r);

  /// Parameter at which numeric metric tracking starts (must lie in the unbroken phase).
  double metric_anchor() const { return metric_anchor_; }
  ModelFamily& with_metric_anchor(double t);

 private:
  std::string name_;
  int dimension_;
  ParameterRange validity_;
  Builder build_;
  ParameterRange default_range_{-1.0, 1.0};
  double metric_anchor_ = 0.0;
};

ModelFamily registry_family(ModelName name);

}  // namespace ptlat
