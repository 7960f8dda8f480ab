#include "krall/report.hpp"

#include "krall/rational.hpp"

#include <sstream>

namespace krall {

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, bool pass, nlohmann::json detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  nlohmann::json j{{"schema", report_schema},
                   {"command", r.command},
                   {"theorem", r.theorem},
                   {"params", r.params},
                   {"nmax", r.nmax},
                   {"status", r.ok() ? "pass" : "fail"},
                   {"checks", checks},
                   {"notes", r.notes},
                   {"data", r.data}};
  if (r.seconds) j["timing"] = {{"seconds", *r.seconds}};
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != report_schema)
      throw InvalidArgument("unsupported report schema " + j.at("schema").dump());
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    r.theorem = j.at("theorem").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.nmax = j.at("nmax").get<int>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail")});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.data = j.at("data");
    if (j.contains("timing")) r.seconds = j.at("timing").at("seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.command;
  if (!r.theorem.empty()) os << " " << r.theorem;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << " nmax=" << r.nmax << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (c.detail.is_string()) os << ": " << c.detail.get<std::string>();
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  if (r.seconds) os << "  time: " << *r.seconds << " s\n";
  os << (r.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

} // namespace krall
