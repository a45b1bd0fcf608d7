#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "conformal/verify.hpp"

namespace conformal {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(complex z) { return ordered_json::array({z.real(), z.imag()}); }

/// Non-finite numbers serialize as null.
inline ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

/// Stable JSON shape of a report; keys appear in a fixed order so equal
/// reports dump to identical bytes.
inline ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["kind"] = r.kind;
  ordered_json constants = ordered_json::object();
  for (const auto& [k, v] : r.constants) constants[k] = number(v);
  j["constants"] = constants;
  j["samples_checked"] = r.samples_checked;
  j["min_ratio"] = number(r.min_ratio);
  j["max_ratio"] = number(r.max_ratio);
  j["argmin"] = to_json(r.argmin);
  j["argmax"] = to_json(r.argmax);
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"z", to_json(v.z)}, {"lhs", number(v.lhs)}, {"rhs", number(v.rhs)}});
  }
  j["violations"] = violations;
  ordered_json skipped = ordered_json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"index", s.index}, {"z", to_json(s.z)}, {"reason", s.reason}});
  j["skipped"] = skipped;
  j["delta_route"] = r.delta_route;
  if (!r.values.empty()) {
    ordered_json values = ordered_json::object();
    for (const auto& [k, v] : r.values) values[k] = number(v);
    j["values"] = values;
  }
  return j;
}

}  // namespace conformal
