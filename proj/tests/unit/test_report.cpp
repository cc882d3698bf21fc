#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hilbert/report.hpp"
#include "json.hpp"

using namespace hilbert::report;

namespace {

std::vector<Row> sample_rows() {
  std::vector<Row> rows(2);
  rows[0].set("kind", "H").set("n", 3).set("value", 0.1).set("ok", true);
  rows[1].set("kind", "Z").set("value", 1.0 / 3.0).set("extra", std::vector<double>{1.0, 2.5}).set_null("ok");
  return rows;
}

}  // namespace

TEST_CASE("double formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, 0.0}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("json output is an array of objects with the union of keys") {
  std::ostringstream os;
  write_json(os, sample_rows());
  const auto j = nlohmann::json::parse(os.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["kind"] == "H");
  CHECK(j[0]["n"] == 3);
  CHECK(j[0]["value"].get<double>() == 0.1);
  CHECK(j[0]["ok"] == true);
  CHECK(j[0]["extra"].is_null());
  CHECK(j[1]["n"].is_null());
  CHECK(j[1]["value"].get<double>() == 1.0 / 3.0);
  CHECK(j[1]["extra"][1].get<double>() == 2.5);
  CHECK(j[1]["ok"].is_null());
  std::vector<std::string> keys;
  for (auto it = j[1].begin(); it != j[1].end(); ++it) keys.push_back(it.key());
  CHECK(keys.size() == 5);
}

TEST_CASE("json column order follows first appearance") {
  std::ostringstream os;
  write_json(os, sample_rows());
  const std::string s = os.str();
  CHECK(s.find("\"kind\"") < s.find("\"n\""));
  CHECK(s.find("\"n\"") < s.find("\"value\""));
  CHECK(s.find("\"ok\"") < s.find("\"extra\""));
  CHECK(s.find('\r') == std::string::npos);
}

TEST_CASE("csv output") {
  std::ostringstream os;
  write_csv(os, sample_rows());
  std::istringstream is(os.str());
  std::string header, r1, r2;
  std::getline(is, header);
  std::getline(is, r1);
  std::getline(is, r2);
  CHECK(header == "kind,n,value,ok,extra");
  CHECK(r1 == "H,3,0.10000000000000001,true,");
  CHECK(r2.rfind("Z,,0.33333333333333331,,", 0) == 0);
}

TEST_CASE("non-finite values become null or empty") {
  std::vector<Row> rows(1);
  rows[0].set("a", std::numeric_limits<double>::infinity()).set("b", std::nan(""));
  std::ostringstream js, cs;
  write_json(js, rows);
  write_csv(cs, rows);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j[0]["a"].is_null());
  CHECK(j[0]["b"].is_null());
  CHECK(cs.str() == "a,b\n,\n");
}

TEST_CASE("strings are escaped") {
  std::vector<Row> rows(1);
  rows[0].set("note", std::string("say \"hi\",\nthen go"));
  std::ostringstream js, cs;
  write_json(js, rows);
  write_csv(cs, rows);
  CHECK(nlohmann::json::parse(js.str())[0]["note"] == "say \"hi\",\nthen go");
  CHECK(cs.str() == "note\n\"say \"\"hi\"\",\nthen go\"\n");
}

TEST_CASE("empty report") {
  std::ostringstream js;
  write_json(js, {});
  CHECK(nlohmann::json::parse(js.str()).empty());
}
