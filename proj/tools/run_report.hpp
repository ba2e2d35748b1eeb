#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace quadcf::cli {

using Json = nlohmann::json;  // object keys are kept sorted, so dumps are stable

/// What one CLI invocation did. Big values are strings everywhere.
struct RunReport {
  std::string command;
  std::string method;
  std::map<std::string, std::string> inputs;
  Json outputs = Json::object();
  std::map<std::string, std::uint64_t> op_counts;
  std::map<std::string, bool> agreement;
  std::optional<std::int64_t> wall_time_ns;  // only when timing was asked for

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["method"] = r.method;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  j["op_counts"] = r.op_counts;
  j["agreement"] = r.agreement;
  if (r.wall_time_ns) j["wall_time_ns"] = *r.wall_time_ns;
  return j;
}

inline RunReport report_from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  r.outputs = j.at("outputs");
  r.op_counts = j.at("op_counts").get<std::map<std::string, std::uint64_t>>();
  r.agreement = j.at("agreement").get<std::map<std::string, bool>>();
  if (j.contains("wall_time_ns")) r.wall_time_ns = j.at("wall_time_ns").get<std::int64_t>();
  return r;
}

inline std::string dump(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace quadcf::cli
