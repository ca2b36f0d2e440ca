// Benchmark bookkeeping shared by the command-line tool and its tests:
// manifest parsing, per-run records, par-2 aggregation, table rendering.
// Pure data transformations: nothing here runs a solver.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace esat::bench {

struct Instance {
  std::string name;
  std::string cnf;
  std::string sidecar;  // optional metadata sidecar path ("" = none)
  std::string nonsym;   // optional non-symmetric clause file ("" = none)
};

struct Config {
  std::string name;
  std::vector<std::string> flags;  // solver flags, as on the command line
};

struct Manifest {
  double timeout = 60.0;  // per-run limit, seconds
  std::vector<Instance> instances;
  std::vector<Config> configs;
};

// Throws on malformed JSON, missing fields, or duplicate instance/config
// names.
Manifest parse_manifest(const std::string& text);

// One (instance, config) run.
struct Record {
  std::string instance;
  std::string config;
  std::string outcome;  // "SAT" | "UNSAT" | "TIMEOUT"
  double time = 0;      // solver wall time, seconds
  double overhead = 0;  // extra-clause machinery time, seconds
  int64_t conflicts = 0;
  int64_t eclauses_added = 0;
  int64_t eclauses_live = 0;
  int64_t eclauses_family = 0;
  int64_t conflict_clauses_live = 0;
};

// Records embed the timeout so a file can be re-aggregated on its own.
std::string serialize_records(double timeout, const std::vector<Record>& rs);
std::vector<Record> parse_records(const std::string& text, double& timeout);

// Per-config aggregate across instances.
struct Row {
  std::string config;
  int solved = 0;
  int timed_out = 0;
  double time = 0;      // summed solver time
  double par2 = 0;      // summed penalized time: timeouts cost 2x the limit
  double overhead = 0;  // summed extra-clause time
  int64_t conflicts = 0;
  int64_t eclauses_added = 0;
  double active_e = -1;  // live extra-lineage clauses / extra-clause family; <0 = undefined
  double active_c = -1;  // live ordinary learned clauses / conflicts; <0 = undefined
};

// Groups records by config and sorts rows by par-2 (ties by name).
// Throws if a record's outcome string is unrecognized.
std::vector<Row> aggregate(const std::vector<Record>& rs, double timeout);

// Fixed-width text table; undefined ratios render as "-".
std::string render_table(const std::vector<Row>& rows);

}  // namespace esat::bench
