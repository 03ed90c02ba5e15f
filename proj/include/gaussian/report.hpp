#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gaussian {

enum class Status { pass, fail, budget_exceeded };

const char* to_string(Status s);

// One verified statement. The statement is self-contained mathematics: a
// reader should be able to judge the claim from the statement alone.
struct Claim {
  std::string statement;
  Status status = Status::fail;
  std::string detail;  // witness, computed value, or failure note
};

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct Scenario {
  std::string name;
  std::vector<std::pair<std::string, ParamValue>> parameters;
  std::vector<Claim> claims;
  double seconds = 0.0;

  // fail if any claim failed; otherwise budget-exceeded if any claim ran out;
  // otherwise pass.
  Status status() const;
};

struct Report {
  std::string tool = "verify";
  int schema_version = 1;
  std::vector<Scenario> scenarios;

  Status status() const;  // same precedence over scenario statuses
};

// Pretty-printed JSON. Timing fields ("seconds") are the only parts that vary
// between identical invocations; pass include_timings = false to drop them.
std::string to_json_string(const Report& report, bool include_timings = true);

}  // namespace gaussian
