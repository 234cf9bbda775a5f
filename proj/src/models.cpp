// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/models.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "ptlat/errors.hpp"

namespace ptlat {

namespace {

struct Entry {
  ModelName name;
  std::string_view key;
};

constexpr std::array<Entry, 6> kModels{{
    {ModelName::Mdg6Open, "mdg6-open"},
    {ModelName::Mdg6W1, "mdg6-w1"},
    {ModelName::Mdg6W2, "mdg6-w2"},
    {ModelName::Ec4, "ec4"},
    {ModelName::Ec4StrongBond, "ec4-strongbond"},
    {ModelName::Ec4Recoupled, "ec4-recoupled"},
}};

bool is_mdg6(ModelName name) {
  return name == ModelName::Mdg6Open || name == ModelName::Mdg6W1 || name == ModelName::Mdg6W2;
}

std::string format_t(double t) {
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

// Couplings of the six-site chain whose spectrum collapses completely at t = 0.
std::vector<Real> mdg6_couplings(const Real& t) {
  const Real a = sqrt(Real(5) - 5 * t);
  const Real b = 2 * sqrt(Real(2) - 2 * t);
  const Real c = 3 * sqrt(Real(1) - t);
  return {a, b, c, b, a};
}

}  // namespace

const std::vector<ModelName>& all_models() {
  static const std::vector<ModelName> names = [] {
    std::vector<ModelName> v;
    for (const auto& e : kModels) v.push_back(e.name);
    return v;
  }();
  return names;
}

std::string_view model_key(ModelName name) {
  for (const auto& e : kModels)
    if (e.name == name) return e.key;
  return "unknown";
}

std::optional<ModelName> parse_model_name(std::string_view key) {
  for (const auto& e : kModels)
    if (e.key == key) return e.name;
  return std::nullopt;
}

LatticeSpec registry_spec(ModelId id) {
  if (!std::isfinite(id.t)) throw DomainError("model parameter must be finite");
  const Real t(id.t);

  if (is_mdg6(id.name)) {
    if (id.t > 1.0) {
      throw DomainError(std::string(model_key(id.name)) + ": radical sqrt(1 - t) is imaginary at t=" +
                        format_t(id.t) + " (requires t <= 1)");
    }
    LatticeSpec spec;
    spec.n = 6;
    spec.diag = {-5, -3, -1, 1, 3, 5};
    spec.upper = mdg6_couplings(t);
    if (id.name == ModelName::Mdg6Open) {
      spec.topology = Topology::Open;
      return spec;
    }
    spec.topology = Topology::Ring;
    const Real w = sqrt(Real(1) - t) / 100;
    if (id.name == ModelName::Mdg6W1) {
      spec.upper.push_back(w);
    } else {
      spec.upper[2] += w;
      spec.upper.push_back(10 * w);
    }
    return spec;
  }

  LatticeSpec spec;
  spec.n = 4;
  spec.topology = Topology::Ring;
  spec.diag = {-3, -1, 1, 3};
  spec.upper = {t, t, t, t};
  switch (id.name) {
    case ModelName::Ec4StrongBond:
      spec.upper[3] = 3 * t / 2;
      break;
    case ModelName::Ec4Recoupled:
      spec.upper[1] = 4 * t / 3;
      spec.upper[3] = t / 4;
      break;
    default:
      break;
  }
  return spec;
}

SquareMatrix registry_model(ModelId id) { return build_lattice(registry_spec(id)); }

ModelFamily::ModelFamily(std::string name, int dimension, ParameterRange validity, Builder build)
    : name_(std::move(name)), dimension_(dimension), validity_(validity), build_(std::move(build)) {
  if (dimension_ < 1) throw InvalidSpec("model dimension must be positive");
  if (!(validity_.lo <= validity_.hi)) throw InvalidSpec("empty validity range for " + name_);
}

SquareMatrix ModelFamily::at(double t) const {
  if (!validity_.contains(t)) {
    throw DomainError(name_ + ": t=" + format_t(t) + " outside validity range [" +
                      format_t(validity_.lo) + ", " + format_t(validity_.hi) + "]");
  }
  return build_(t);
}

ModelFamily& ModelFamily::with_default_range(ParameterRange r) {
  default_range_ = r;
  return *this;
}

ModelFamily& ModelFamily::with_metric_anchor(double t) {
  metric_anchor_ = t;
  return *this;
}

ModelFamily registry_family(ModelName name) {
  const bool mdg = is_mdg6(name);
  ParameterRange validity;
  if (mdg) validity.hi = 1.0;
  ModelFamily family(std::string(model_key(name)), mdg ? 6 : 4, validity,
                     [name](double t) { return registry_model({name, t}); });
  if (mdg) {
    family.with_default_range({-0.5, 1.0}).with_metric_anchor(1.0);
  } else if (name == ModelName::Ec4Recoupled) {
    family.with_default_range({-1.2, 1.2}).with_metric_anchor(0.0);
  } else {
    family.with_default_range({-1.6, 1.6}).with_metric_anchor(0.0);
  }
  return family;
}

}  // namespace ptlat
