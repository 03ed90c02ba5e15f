#include "gaussian/report.hpp"

#include "json.hpp"

namespace gaussian {

namespace {

Status combine(Status acc, Status next) {
  if (acc == Status::fail || next == Status::fail) return Status::fail;
  if (acc == Status::budget_exceeded || next == Status::budget_exceeded)
    return Status::budget_exceeded;
  return Status::pass;
}

nlohmann::ordered_json param_json(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::budget_exceeded: return "budget-exceeded";
  }
  return "fail";
}

Status Scenario::status() const {
  Status acc = Status::pass;
  for (const Claim& c : claims) acc = combine(acc, c.status);
  return acc;
}

Status Report::status() const {
  Status acc = Status::pass;
  for (const Scenario& s : scenarios) acc = combine(acc, s.status());
  return acc;
}

std::string to_json_string(const Report& report, bool include_timings) {
  nlohmann::ordered_json out;
  out["tool"] = report.tool;
  out["schema_version"] = report.schema_version;
  out["status"] = to_string(report.status());
  out["scenarios"] = nlohmann::ordered_json::array();
  for (const Scenario& s : report.scenarios) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["status"] = to_string(s.status());
    js["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : s.parameters) js["parameters"][key] = param_json(value);
    js["claims"] = nlohmann::ordered_json::array();
    for (const Claim& c : s.claims) {
      nlohmann::ordered_json jc;
      jc["statement"] = c.statement;
      jc["status"] = to_string(c.status);
      if (!c.detail.empty()) jc["detail"] = c.detail;
      js["claims"].push_back(std::move(jc));
    }
    if (include_timings) js["seconds"] = s.seconds;
    out["scenarios"].push_back(std::move(js));
  }
  return out.dump(2) + "\n";
}

}  // namespace gaussian
