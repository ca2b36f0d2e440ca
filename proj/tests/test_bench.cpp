#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "bench.hpp"

using namespace esat::bench;

namespace {

Record rec(const std::string& inst, const std::string& cfg, const std::string& outcome,
           double time) {
  Record r;
  r.instance = inst;
  r.config = cfg;
  r.outcome = outcome;
  r.time = time;
  return r;
}

}  // namespace

TEST_CASE("manifest parsing") {
  const char* good = R"({
    "timeout": 30,
    "instances": [
      {"name": "a", "cnf": "a.cnf", "sidecar": "a.meta"},
      {"name": "b", "cnf": "b.cnf"}
    ],
    "configs": [
      {"name": "native", "flags": []},
      {"name": "waerden", "flags": ["--waerden", "--filter-x", "5"]}
    ]
  })";
  Manifest m = parse_manifest(good);
  CHECK(m.timeout == 30);
  REQUIRE(m.instances.size() == 2);
  CHECK(m.instances[0].sidecar == "a.meta");
  CHECK(m.instances[1].sidecar.empty());
  REQUIRE(m.configs.size() == 2);
  CHECK(m.configs[1].flags == std::vector<std::string>{"--waerden", "--filter-x", "5"});

  SUBCASE("timeout defaults") {
    Manifest d = parse_manifest(
        R"({"instances":[{"name":"a","cnf":"a.cnf"}],"configs":[{"name":"n"}]})");
    CHECK(d.timeout == 60.0);
  }
  SUBCASE("rejects duplicate config names") {
    CHECK_THROWS_AS(parse_manifest(R"({
      "instances": [{"name": "a", "cnf": "a.cnf"}],
      "configs": [{"name": "x"}, {"name": "x"}]
    })"),
                    std::runtime_error);
  }
  SUBCASE("rejects duplicate instance names") {
    CHECK_THROWS_AS(parse_manifest(R"({
      "instances": [{"name": "a", "cnf": "a.cnf"}, {"name": "a", "cnf": "b.cnf"}],
      "configs": [{"name": "x"}]
    })"),
                    std::runtime_error);
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_manifest("not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_manifest(R"({"configs":[{"name":"x"}]})"), std::runtime_error);
    CHECK_THROWS_AS(parse_manifest(R"({"instances":[{"name":"a"}],"configs":[{"name":"x"}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(
        parse_manifest(
            R"({"timeout":-1,"instances":[{"name":"a","cnf":"c"}],"configs":[{"name":"x"}]})"),
        std::runtime_error);
  }
}

TEST_CASE("records round-trip bit-exactly") {
  std::vector<Record> rs;
  Record a = rec("i1", "native", "SAT", 0.12345678901234567);
  a.overhead = 0.001;
  a.conflicts = 12345;
  a.eclauses_added = 7;
  a.eclauses_live = 5;
  a.eclauses_family = 9;
  a.conflict_clauses_live = 1000;
  rs.push_back(a);
  rs.push_back(rec("i1", "waerden", "TIMEOUT", 30.0));

  std::string text = serialize_records(30.0, rs);
  double timeout = 0;
  std::vector<Record> back = parse_records(text, timeout);
  CHECK(timeout == 30.0);
  REQUIRE(back.size() == 2);
  CHECK(back[0].instance == "i1");
  CHECK(back[0].time == a.time);  // exact double round-trip
  CHECK(back[0].conflicts == 12345);
  CHECK(back[0].eclauses_family == 9);
  CHECK(serialize_records(timeout, back) == text);  // re-serialization is identical

  SUBCASE("malformed records files are rejected") {
    CHECK_THROWS_AS(parse_records("{}", timeout), std::runtime_error);
    CHECK_THROWS_AS(parse_records("[1,2]", timeout), std::runtime_error);
  }
}

TEST_CASE("par-2 aggregation") {
  std::vector<Record> rs;
  rs.push_back(rec("i1", "slow", "SAT", 10.0));
  rs.push_back(rec("i2", "slow", "TIMEOUT", 30.0));
  rs.push_back(rec("i1", "fast", "SAT", 1.0));
  rs.push_back(rec("i2", "fast", "UNSAT", 2.0));

  auto rows = aggregate(rs, 30.0);
  REQUIRE(rows.size() == 2);
  // sorted by par-2: fast (3.0) before slow (10 + 60 = 70)
  CHECK(rows[0].config == "fast");
  CHECK(rows[0].par2 == doctest::Approx(3.0));
  CHECK(rows[0].solved == 2);
  CHECK(rows[0].timed_out == 0);
  CHECK(rows[1].config == "slow");
  CHECK(rows[1].par2 == doctest::Approx(70.0));
  CHECK(rows[1].time == doctest::Approx(40.0));  // wall time includes the timed-out run
  CHECK(rows[1].solved == 1);
  CHECK(rows[1].timed_out == 1);

  SUBCASE("par-2 ties sort by name") {
    std::vector<Record> tie = {rec("i", "b", "SAT", 1.0), rec("i", "a", "SAT", 1.0)};
    auto t = aggregate(tie, 10.0);
    CHECK(t[0].config == "a");
    CHECK(t[1].config == "b");
  }
  SUBCASE("unknown outcomes are rejected") {
    std::vector<Record> bad = {rec("i", "c", "MAYBE", 1.0)};
    CHECK_THROWS_AS(aggregate(bad, 10.0), std::runtime_error);
  }
  SUBCASE("aggregation is pure") {
    CHECK(render_table(aggregate(rs, 30.0)) == render_table(aggregate(rs, 30.0)));
  }
}

TEST_CASE("activity ratios") {
  Record a = rec("i1", "c", "UNSAT", 1.0);
  a.conflicts = 100;
  a.conflict_clauses_live = 25;
  a.eclauses_live = 3;
  a.eclauses_family = 4;
  Record b = rec("i2", "c", "UNSAT", 1.0);
  b.conflicts = 100;
  b.conflict_clauses_live = 35;
  b.eclauses_live = 1;
  b.eclauses_family = 4;

  auto rows = aggregate({a, b}, 10.0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].active_e == doctest::Approx(0.5));   // (3+1)/(4+4)
  CHECK(rows[0].active_c == doctest::Approx(0.3));   // (25+35)/200
  CHECK(rows[0].active_e >= 0);
  CHECK(rows[0].active_e <= 1);

  SUBCASE("undefined ratios render as a dash") {
    Record none = rec("i1", "native", "UNSAT", 1.0);  // no extra clauses at all
    auto r = aggregate({none}, 10.0);
    CHECK(r[0].active_e < 0);
    std::string table = render_table(r);
    CHECK(table.find('-') != std::string::npos);
  }
}

TEST_CASE("table rendering") {
  std::vector<Record> rs = {rec("i1", "native", "SAT", 1.5)};
  std::string table = render_table(aggregate(rs, 10.0));
  CHECK(table.find("config") != std::string::npos);
  CHECK(table.find("par2[s]") != std::string::npos);
  CHECK(table.find("active_E") != std::string::npos);
  CHECK(table.find("native") != std::string::npos);
  CHECK(table.find("1.50") != std::string::npos);
  CHECK(render_table({}).find("config") != std::string::npos);
}
