#pragma once

#include "krall/rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace krall {

inline constexpr const char* report_schema = "krall-report/1";

struct Check {
  std::string name;
  bool pass = true;
  nlohmann::json detail; // witnesses on failure, values otherwise
};

struct VerificationReport {
  std::string command;
  std::string theorem;
  std::map<std::string, std::string> params; // rationals as "p/q"
  int nmax = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  nlohmann::json data; // tables, operators, measures
  std::optional<double> seconds; // only with --timing

  bool ok() const;
  void add(std::string name, bool pass, nlohmann::json detail = nlohmann::json::object());
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_text(const VerificationReport& r);

} // namespace krall
