#include "krall/report.hpp"

#include <doctest.h>

using namespace krall;

namespace {
VerificationReport sample() {
  VerificationReport r;
  r.command = "krall";
  r.theorem = "charlier";
  r.params = {{"a", "1/1"}, {"k", "2/1"}};
  r.nmax = 10;
  r.add("eigen", true, "n <= 10");
  r.add("genre", true, {{"s", -3}, {"r", 3}});
  r.notes.push_back("a note");
  r.data = {{"lambda", {"-1/6", "1/3"}}};
  return r;
}
} // namespace

TEST_CASE("report status") {
  auto r = sample();
  CHECK(r.ok());
  CHECK(to_json(r)["status"] == "pass");
  r.add("gram", false, {{"i", 1}, {"j", 0}});
  CHECK_FALSE(r.ok());
  CHECK(to_json(r)["status"] == "fail");
  CHECK(to_text(r).find("[FAIL] gram") != std::string::npos);
}

TEST_CASE("report JSON round-trip is byte-identical") {
  auto r = sample();
  auto j = to_json(r);
  CHECK(j["schema"] == report_schema);
  CHECK_FALSE(j.contains("timing"));
  CHECK(to_json(report_from_json(j)).dump() == j.dump());
  r.seconds = 0.25;
  auto jt = to_json(r);
  CHECK(jt["timing"]["seconds"] == 0.25);
  CHECK(to_json(report_from_json(jt)).dump() == jt.dump());
}

TEST_CASE("report schema is validated") {
  auto j = to_json(sample());
  j["schema"] = "krall-report/0";
  CHECK_THROWS_AS(report_from_json(j), InvalidArgument);
  CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), InvalidArgument);
}
