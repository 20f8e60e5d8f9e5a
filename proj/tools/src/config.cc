// Copyright 2026 The nomgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

namespace nomgame::cli {

namespace {

constexpr const char* kModelKeys[] = {"b_L",     "b_R", "alpha_L", "alpha_R",
                                      "k_l",     "k_r", "k_o",     "nu_l",
                                      "nu_r",    "nu_o"};

double* ModelField(ModelParams& p, const std::string& key) {
  if (key == "b_L") return &p.b_L;
  if (key == "b_R") return &p.b_R;
  if (key == "alpha_L") return &p.alpha_L;
  if (key == "alpha_R") return &p.alpha_R;
  if (key == "k_l") return &p.k_l;
  if (key == "k_r") return &p.k_r;
  if (key == "k_o") return &p.k_o;
  if (key == "nu_l") return &p.nu_l;
  if (key == "nu_r") return &p.nu_r;
  if (key == "nu_o") return &p.nu_o;
  return nullptr;
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& text,
              const char* kind) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(
        fmt::format("field '{}': expected {}, got '{}'", key, kind, text));
  }
  return value;
}

double ParseReal(const std::string& key, const std::string& text) {
  return ParseNumber<double>(key, text, "a real number");
}

std::string Real(double v) { return fmt::format("{}", v); }

std::string Prefix(const Locations& where, const std::string& key) {
  auto it = where.find(key);
  return it == where.end() ? std::string() : it->second + ": ";
}

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const auto* keys = new std::vector<std::string>{
      "b_L",          "b_R",        "alpha_L", "alpha_R", "k_l",
      "k_r",          "k_o",        "nu_l",    "nu_r",    "nu_o",
      "policy_steps", "rent_steps", "epsilon", "tie_eps", "timing",
      "format",       "out",        "seed",    "samples", "axis1",
      "axis2"};
  return *keys;
}

void SetKey(RunConfig& c, const std::string& key, const std::string& value) {
  if (double* field = ModelField(c.params, key)) {
    *field = ParseReal(key, value);
  } else if (key == "policy_steps") {
    c.policy_steps = ParseNumber<int>(key, value, "an integer");
  } else if (key == "rent_steps") {
    c.rent_steps = ParseNumber<int>(key, value, "an integer");
  } else if (key == "epsilon") {
    c.epsilon = ParseReal(key, value);
  } else if (key == "tie_eps") {
    c.tie_eps = ParseReal(key, value);
  } else if (key == "timing") {
    if (value == "sequential") {
      c.timing = LeftTiming::kSequential;
    } else if (value == "simultaneous") {
      c.timing = LeftTiming::kSimultaneous;
    } else {
      throw ConfigError(fmt::format(
          "field 'timing': expected sequential or simultaneous, got '{}'",
          value));
    }
  } else if (key == "format") {
    if (value == "csv") {
      c.format = Format::kCsv;
    } else if (value == "json") {
      c.format = Format::kJson;
    } else if (value == "auto") {
      c.format.reset();
    } else {
      throw ConfigError(fmt::format(
          "field 'format': expected csv, json or auto, got '{}'", value));
    }
  } else if (key == "out") {
    c.out = value;
  } else if (key == "seed") {
    c.seed = ParseNumber<std::uint64_t>(key, value, "an unsigned integer");
  } else if (key == "samples") {
    c.samples = ParseNumber<int>(key, value, "an integer");
  } else if (key == "axis1") {
    ParseAxis(value);
    c.axis1 = value;
  } else if (key == "axis2") {
    ParseAxis(value);
    c.axis2 = value;
  } else {
    throw ConfigError(fmt::format("unknown field '{}'", key));
  }
}

RunConfig ParseConfigText(const std::string& text, const std::string& path,
                          Locations* where) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(
        fmt::format("{}:{}: {}", path, e.mark.line + 1, e.msg));
  }
  if (!root.IsMap()) {
    throw ConfigError(
        fmt::format("{}: expected a mapping of key: value", path));
  }
  RunConfig config;
  std::set<std::string> seen;
  for (const auto& entry : root) {
    const int line = entry.first.Mark().line + 1;
    const std::string at = fmt::format("{}:{}", path, line);
    if (!entry.first.IsScalar() || !entry.second.IsScalar()) {
      throw ConfigError(fmt::format("{}: expected a flat key: value pair", at));
    }
    const std::string key = entry.first.Scalar();
    if (!seen.insert(key).second) {
      throw ConfigError(fmt::format("{}: duplicate field '{}'", at, key));
    }
    try {
      SetKey(config, key, entry.second.Scalar());
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}: {}", at, e.what()));
    }
    if (where) (*where)[key] = at;
  }
  for (const char* key : kModelKeys) {
    if (!seen.count(key)) {
      throw ConfigError(
          fmt::format("{}: missing required field '{}'", path, key));
    }
  }
  return config;
}

RunConfig LoadConfigFile(const std::string& path, Locations* where) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("{}: cannot open file", path));
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfigText(text.str(), path, where);
}

void ApplyOverride(RunConfig& config, const std::string& assignment,
                   Locations* where) {
  const auto eq = assignment.find('=');
  const std::string at = fmt::format("--set {}", assignment);
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError(fmt::format("{}: expected key=value", at));
  }
  const std::string key = assignment.substr(0, eq);
  try {
    SetKey(config, key, assignment.substr(eq + 1));
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", at, e.what()));
  }
  if (where) (*where)[key] = at;
}

void ValidateConfig(const RunConfig& c, const Locations& where) {
  try {
    Validate(c.params);
  } catch (const ModelError& e) {
    // The message names the invariant, whose first token is the field.
    const std::string message = e.what();
    std::string field;
    for (const char* key : kModelKeys) {
      if (message.find(std::string(": ") + key + " ") != std::string::npos) {
        field = key;
      }
    }
    if (field.empty()) throw ConfigError(message);
    RunConfig copy = c;
    throw ConfigError(fmt::format("{}{} ({} = {})", Prefix(where, field),
                                  message, field,
                                  Real(*ModelField(copy.params, field))));
  }
  auto require = [&](bool ok, const std::string& key, const char* what) {
    if (!ok) {
      throw ConfigError(fmt::format("{}invalid setting: {}",
                                    Prefix(where, key), what));
    }
  };
  require(c.policy_steps >= 2, "policy_steps", "policy_steps >= 2");
  require(c.rent_steps >= 2, "rent_steps", "rent_steps >= 2");
  require(std::isfinite(c.epsilon) && c.epsilon > 0.0, "epsilon",
          "epsilon > 0");
  require(std::isfinite(c.tie_eps) && c.tie_eps >= 0.0, "tie_eps",
          "tie_eps >= 0");
  require(c.tie_eps < c.epsilon, "tie_eps", "tie_eps < epsilon");
  require(c.samples >= 0, "samples", "samples >= 0");
}

std::string DumpConfig(const RunConfig& c) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  RunConfig copy = c;
  for (const char* key : kModelKeys) {
    out << YAML::Key << key << YAML::Value
        << Real(*ModelField(copy.params, key));
  }
  out << YAML::Key << "policy_steps" << YAML::Value << c.policy_steps;
  out << YAML::Key << "rent_steps" << YAML::Value << c.rent_steps;
  out << YAML::Key << "epsilon" << YAML::Value << Real(c.epsilon);
  out << YAML::Key << "tie_eps" << YAML::Value << Real(c.tie_eps);
  out << YAML::Key << "timing" << YAML::Value
      << (c.timing == LeftTiming::kSequential ? "sequential" : "simultaneous");
  out << YAML::Key << "format" << YAML::Value
      << (!c.format ? "auto" : *c.format == Format::kCsv ? "csv" : "json");
  out << YAML::Key << "out" << YAML::Value << YAML::DoubleQuoted << c.out;
  out << YAML::Key << "seed" << YAML::Value << c.seed;
  out << YAML::Key << "samples" << YAML::Value << c.samples;
  out << YAML::Key << "axis1" << YAML::Value << c.axis1;
  out << YAML::Key << "axis2" << YAML::Value << c.axis2;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

GridSpec MakeGrid(const RunConfig& c, const ModelParams& params) {
  GridSpec grid = DefaultGrid(params, c.epsilon, c.policy_steps, c.rent_steps);
  grid.tie_eps = c.tie_eps;
  grid.timing = c.timing;
  return grid;
}

Axis ParseAxis(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw ConfigError(fmt::format(
        "axis '{}': expected field:lo:hi:steps", text));
  }
  if (!IsAxisField(parts[0])) {
    throw ConfigError(fmt::format("axis '{}': unknown field '{}'", text,
                                  parts[0]));
  }
  Axis axis;
  axis.field = parts[0];
  axis.lo = ParseReal("axis lo", parts[1]);
  axis.hi = ParseReal("axis hi", parts[2]);
  axis.steps = ParseNumber<int>("axis steps", parts[3], "an integer");
  if (axis.steps < 1) {
    throw ConfigError(fmt::format("axis '{}': steps >= 1", text));
  }
  return axis;
}

std::string FormatAxis(const Axis& axis) {
  return fmt::format("{}:{}:{}:{}", axis.field, axis.lo, axis.hi,
                     axis.steps);
}

}  // namespace nomgame::cli
