#include "bench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace esat::bench {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error("bench: " + msg);
}

std::string require_string(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_string() || j[key].get<std::string>().empty())
    fail(std::string(what) + " needs a non-empty string \"" + key + "\"");
  return j[key].get<std::string>();
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("manifest is not valid JSON: ") + e.what());
  }
  Manifest m;
  if (j.contains("timeout")) {
    if (!j["timeout"].is_number() || j["timeout"].get<double>() <= 0)
      fail("\"timeout\" must be a positive number of seconds");
    m.timeout = j["timeout"].get<double>();
  }
  if (!j.contains("instances") || !j["instances"].is_array() || j["instances"].empty())
    fail("manifest needs a non-empty \"instances\" array");
  if (!j.contains("configs") || !j["configs"].is_array() || j["configs"].empty())
    fail("manifest needs a non-empty \"configs\" array");

  std::set<std::string> seen;
  for (const auto& ji : j["instances"]) {
    Instance inst;
    inst.name = require_string(ji, "name", "instance");
    inst.cnf = require_string(ji, "cnf", "instance");
    if (ji.contains("sidecar")) inst.sidecar = ji["sidecar"].get<std::string>();
    if (ji.contains("nonsym")) inst.nonsym = ji["nonsym"].get<std::string>();
    if (!seen.insert(inst.name).second)
      fail("duplicate instance name: " + inst.name);
    m.instances.push_back(std::move(inst));
  }
  seen.clear();
  for (const auto& jc : j["configs"]) {
    Config cfg;
    cfg.name = require_string(jc, "name", "config");
    if (jc.contains("flags")) {
      if (!jc["flags"].is_array()) fail("config \"flags\" must be an array");
      for (const auto& f : jc["flags"]) {
        if (!f.is_string()) fail("config flags must be strings");
        cfg.flags.push_back(f.get<std::string>());
      }
    }
    if (!seen.insert(cfg.name).second)
      fail("duplicate config name: " + cfg.name);
    m.configs.push_back(std::move(cfg));
  }
  return m;
}

std::string serialize_records(double timeout, const std::vector<Record>& rs) {
  ordered root;
  root["timeout"] = timeout;
  root["records"] = ordered::array();
  for (const Record& r : rs) {
    ordered row;
    row["instance"] = r.instance;
    row["config"] = r.config;
    row["outcome"] = r.outcome;
    row["time"] = r.time;
    row["overhead"] = r.overhead;
    row["conflicts"] = r.conflicts;
    row["eclauses_added"] = r.eclauses_added;
    row["eclauses_live"] = r.eclauses_live;
    row["eclauses_family"] = r.eclauses_family;
    row["conflict_clauses_live"] = r.conflict_clauses_live;
    root["records"].push_back(std::move(row));
  }
  return root.dump(2) + "\n";
}

std::vector<Record> parse_records(const std::string& text, double& timeout) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("records file is not valid JSON: ") + e.what());
  }
  if (!j.contains("timeout") || !j["timeout"].is_number())
    fail("records file needs a numeric \"timeout\"");
  if (!j.contains("records") || !j["records"].is_array())
    fail("records file needs a \"records\" array");
  timeout = j["timeout"].get<double>();
  std::vector<Record> rs;
  for (const auto& row : j["records"]) {
    Record r;
    r.instance = require_string(row, "instance", "record");
    r.config = require_string(row, "config", "record");
    r.outcome = require_string(row, "outcome", "record");
    r.time = row.at("time").get<double>();
    r.overhead = row.at("overhead").get<double>();
    r.conflicts = row.at("conflicts").get<int64_t>();
    r.eclauses_added = row.at("eclauses_added").get<int64_t>();
    r.eclauses_live = row.at("eclauses_live").get<int64_t>();
    r.eclauses_family = row.at("eclauses_family").get<int64_t>();
    r.conflict_clauses_live = row.at("conflict_clauses_live").get<int64_t>();
    rs.push_back(std::move(r));
  }
  return rs;
}

std::vector<Row> aggregate(const std::vector<Record>& rs, double timeout) {
  struct Sums {
    Row row;
    int64_t live = 0, family = 0, ccl = 0;
  };
  std::map<std::string, Sums> by_config;
  for (const Record& r : rs) {
    Sums& s = by_config[r.config];
    s.row.config = r.config;
    if (r.outcome == "TIMEOUT") {
      s.row.timed_out += 1;
      s.row.par2 += 2 * timeout;
    } else if (r.outcome == "SAT" || r.outcome == "UNSAT") {
      s.row.solved += 1;
      s.row.par2 += r.time;
    } else {
      fail("unknown outcome \"" + r.outcome + "\" for " + r.instance);
    }
    s.row.time += r.time;
    s.row.overhead += r.overhead;
    s.row.conflicts += r.conflicts;
    s.row.eclauses_added += r.eclauses_added;
    s.live += r.eclauses_live;
    s.family += r.eclauses_family;
    s.ccl += r.conflict_clauses_live;
  }
  std::vector<Row> rows;
  for (auto& [name, s] : by_config) {
    if (s.family > 0)
      s.row.active_e = static_cast<double>(s.live) / static_cast<double>(s.family);
    if (s.row.conflicts > 0)
      s.row.active_c = static_cast<double>(s.ccl) / static_cast<double>(s.row.conflicts);
    rows.push_back(std::move(s.row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.par2 != b.par2) return a.par2 < b.par2;
    return a.config < b.config;
  });
  return rows;
}

std::string render_table(const std::vector<Row>& rows) {
  auto ratio = [](double v) {
    if (v < 0) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %6s %9s %10s %10s %11s %9s %9s %9s %9s\n",
                "config", "solved", "timeouts", "time[s]", "par2[s]", "conflicts",
                "eclauses", "ovhd[s]", "active_E", "active_C");
  out += line;
  for (const Row& r : rows) {
    std::snprintf(line, sizeof line,
                  "%-24s %6d %9d %10.2f %10.2f %11lld %9lld %9.2f %9s %9s\n",
                  r.config.c_str(), r.solved, r.timed_out, r.time, r.par2,
                  static_cast<long long>(r.conflicts),
                  static_cast<long long>(r.eclauses_added), r.overhead,
                  ratio(r.active_e).c_str(), ratio(r.active_c).c_str());
    out += line;
  }
  return out;
}

}  // namespace esat::bench
