// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/custom_model.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "ptlat/errors.hpp"

namespace ptlat {

namespace {

const std::set<std::string> kKeys{"name", "n", "topology", "diag", "upper", "t_range", "metric_anchor"};

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& source, const std::string& message) {
  const YAML::Mark mark = node.Mark();
  throw ParseError(source + ": " + message, mark.line + 1, mark.column + 1);
}

YAML::Node require(const YAML::Node& root, const char* key, const std::string& source) {
  const YAML::Node node = root[key];
  if (!node) throw InvalidSpec(source + ": missing required key '" + std::string(key) + "'");
  return node;
}

double as_double(const YAML::Node& node, const std::string& source, const std::string& field) {
  if (!node.IsScalar()) fail_at(node, source, field + " must be a number");
  try {
    const double v = node.as<double>();
    if (!std::isfinite(v)) fail_at(node, source, field + " must be finite");
    return v;
  } catch (const YAML::BadConversion&) {
    fail_at(node, source, field + " must be a number, got '" + node.Scalar() + "'");
  }
}

std::vector<Expression> expressions(const YAML::Node& seq, const std::string& source, const std::string& field) {
  if (!seq.IsSequence()) fail_at(seq, source, field + " must be a list of expressions");
  std::vector<Expression> out;
  for (const auto& item : seq) {
    if (!item.IsScalar()) fail_at(item, source, field + " entries must be scalars");
    try {
      out.push_back(Expression::parse(item.Scalar()));
    } catch (const ParseError& e) {
      const YAML::Mark mark = item.Mark();
      // Quoted scalars start one character after their mark.
      const int offset = item.Tag() == "!" ? 1 : 0;
      throw ParseError(source + ": " + field + ": " + e.message(), mark.line + 1,
                       mark.column + offset + e.column());
    }
  }
  return out;
}

}  // namespace

LatticeSpec CustomModelSpec::evaluate(double t) const {
  if (!validity.contains(t)) {
    std::ostringstream os;
    os.precision(17);
    os << name << ": t=" << t << " outside validity range [" << validity.lo << ", " << validity.hi << "]";
    throw DomainError(os.str());
  }
  LatticeSpec spec;
  spec.n = n;
  spec.topology = topology;
  const Real rt(t);
  for (const auto& e : diag) spec.diag.push_back(e.evaluate(rt));
  for (const auto& e : upper) spec.upper.push_back(e.evaluate(rt));
  return spec;
}

ModelFamily CustomModelSpec::family() const {
  ModelFamily fam(name, n, validity, [spec = *this](double t) { return build_lattice(spec.evaluate(t)); });
  if (explicit_range) fam.with_default_range(validity);
  fam.with_metric_anchor(metric_anchor);
  return fam;
}

CustomModelSpec parse_custom_model(const std::string& document, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(document);
  } catch (const YAML::ParserException& e) {
    throw ParseError(source + ": " + e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) throw InvalidSpec(source + ": document must be a mapping");
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!kKeys.count(key)) fail_at(kv.first, source, "unknown key '" + key + "'");
  }

  CustomModelSpec spec;
  spec.name = root["name"] ? root["name"].as<std::string>() : "custom";

  const YAML::Node n_node = require(root, "n", source);
  const double n = as_double(n_node, source, "n");
  if (n < 1 || n != std::floor(n) || n > 64) fail_at(n_node, source, "n must be an integer in [1, 64]");
  spec.n = static_cast<int>(n);

  const YAML::Node topo = require(root, "topology", source);
  const std::string topo_name = topo.IsScalar() ? topo.Scalar() : "";
  if (topo_name == "open") {
    spec.topology = Topology::Open;
  } else if (topo_name == "ring") {
    spec.topology = Topology::Ring;
  } else {
    fail_at(topo, source, "topology must be 'open' or 'ring'");
  }
  if (spec.topology == Topology::Ring && spec.n % 2 != 0) {
    fail_at(n_node, source, "ring lattices need an even number of sites, got n=" + std::to_string(spec.n));
  }

  const YAML::Node diag = require(root, "diag", source);
  spec.diag = expressions(diag, source, "diag");
  if (static_cast<int>(spec.diag.size()) != spec.n) {
    fail_at(diag, source, "diag needs " + std::to_string(spec.n) + " entries, got " + std::to_string(spec.diag.size()));
  }
  const YAML::Node upper = require(root, "upper", source);
  spec.upper = expressions(upper, source, "upper");
  const int couplings = spec.topology == Topology::Ring ? spec.n : spec.n - 1;
  if (static_cast<int>(spec.upper.size()) != couplings) {
    fail_at(upper, source, "upper needs " + std::to_string(couplings) + " entries, got " +
                               std::to_string(spec.upper.size()));
  }

  bool polynomial = true;
  for (const auto& e : spec.diag) polynomial = polynomial && e.is_polynomial();
  for (const auto& e : spec.upper) polynomial = polynomial && e.is_polynomial();

  if (const YAML::Node range = root["t_range"]) {
    if (!range.IsSequence() || range.size() != 2) fail_at(range, source, "t_range must be [lo, hi]");
    spec.validity = {as_double(range[0], source, "t_range"), as_double(range[1], source, "t_range")};
    if (!(spec.validity.lo < spec.validity.hi)) fail_at(range, source, "t_range needs lo < hi");
    spec.explicit_range = true;
  } else if (!polynomial) {
    throw InvalidSpec(source + ": entries use sqrt or division, so the validity range cannot be inferred; "
                      "add an explicit t_range");
  }

  if (const YAML::Node anchor = root["metric_anchor"]) {
    spec.metric_anchor = as_double(anchor, source, "metric_anchor");
    if (!spec.validity.contains(spec.metric_anchor)) fail_at(anchor, source, "metric_anchor lies outside t_range");
  } else if (spec.explicit_range) {
    spec.metric_anchor = (spec.validity.lo + spec.validity.hi) / 2;
  }

  // Evaluate once inside the range so bad radicands surface at load time.
  const double probe = spec.explicit_range ? spec.metric_anchor : 0.0;
  spec.evaluate(probe).validate();
  return spec;
}

CustomModelSpec load_custom_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_custom_model(buffer.str(), path.string());
}

}  // namespace ptlat
