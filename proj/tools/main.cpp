// esat command-line tool: instance generation, solving, verification, and
// benchmarking.  Talks to the solver exclusively through the public C API.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bench.hpp"
#include "esat.h"

namespace {

using FormulaPtr = std::unique_ptr<esat_formula, decltype(&esat_formula_free)>;
using SolverPtr = std::unique_ptr<esat_solver, decltype(&esat_solver_free)>;

FormulaPtr make_formula() {
  FormulaPtr f(esat_formula_new(), &esat_formula_free);
  if (!f) throw std::runtime_error(esat_last_error());
  return f;
}

SolverPtr make_solver() {
  SolverPtr s(esat_solver_new(), &esat_solver_free);
  if (!s) throw std::runtime_error(esat_last_error());
  return s;
}

void check(int rc) {
  if (rc < 0) throw std::runtime_error(esat_last_error());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

/* ------------------------------------------------------------------ */
/* Solver options shared by `solve` and the bench config flag lists    */
/* ------------------------------------------------------------------ */

struct SolveOptions {
  bool waerden = false;
  bool pythagorean = false;
  bool dyn_sym = false;
  std::string generators;
  int filter_x = 3;
  int max_size = 20;
  int lbd_cap = 0;
  int restart_base = 100;
  int64_t max_eclauses = -1;
  int64_t examine_cap = -1;
  int64_t max_conflicts = -1;
  int64_t reduce_interval = 15000;
  int64_t tier2_interval = 10000;
  int64_t tier2_untouched = 30000;
  double eclause_activity = 0.8;
  double deletion_ratio = 0.8;
  double timeout = 0;
  uint64_t seed = 0;
  bool no_filtering = false;
  bool bin_min = false;
};

void add_solve_options(CLI::App& app, SolveOptions& o) {
  auto* w = app.add_flag("--waerden", o.waerden,
                         "derive extra clauses by gliding-shift symmetry");
  auto* p = app.add_flag("--pythagorean", o.pythagorean,
                         "derive extra clauses by integer-scaling symmetry");
  w->excludes(p);
  p->excludes(w);
  app.add_flag("--dyn-sym-exploit", o.dyn_sym,
               "derive extra clauses from explicit symmetry generators");
  app.add_option("--generators", o.generators,
                 "symmetry generator file (one permutation per line, cycle form)");
  app.add_option("--filter-x", o.filter_x,
                 "keep candidates with at most this many non-false literals (<0 off)");
  app.add_option("--max-size", o.max_size,
                 "keep candidates with at most this many literals (<=0 off)");
  app.add_option("--lbd-cap", o.lbd_cap,
                 "keep candidates whose assigned literals span at most this many levels (<=0 off)");
  app.add_option("--max-eclauses", o.max_eclauses,
                 "stop installing extra clauses after this many (<0 unlimited)");
  app.add_option("--examine-cap", o.examine_cap,
                 "budget on assignment-dependent filter evaluations (<0 unlimited)");
  app.add_option("--eclause-activity", o.eclause_activity,
                 "initial extra-clause activity relative to the current bump");
  app.add_option("--deletion-ratio", o.deletion_ratio,
                 "fraction of local-tier clauses removed per reduction");
  app.add_option("--restart-base", o.restart_base, "Luby restart unit, in conflicts");
  app.add_option("--reduce-interval", o.reduce_interval,
                 "conflicts between local-tier reductions");
  app.add_option("--tier2-interval", o.tier2_interval,
                 "conflicts between mid-tier demotion scans");
  app.add_option("--tier2-untouched", o.tier2_untouched,
                 "demote mid-tier clauses untouched this many conflicts");
  app.add_option("--seed", o.seed, "perturbs initial phases when nonzero");
  app.add_option("--timeout", o.timeout, "wall-clock limit in seconds (0 unlimited)");
  app.add_option("--max-conflicts", o.max_conflicts, "conflict limit (<0 unlimited)");
  app.add_flag("--no-filtering", o.no_filtering, "disable all candidate filters");
  app.add_flag("--bin-min", o.bin_min,
               "binary-resolution strengthening of learned clauses");
}

void apply_solve_options(esat_solver* s, const SolveOptions& o) {
  if (o.waerden) check(esat_solver_set_plugin(s, "gliding"));
  if (o.pythagorean) check(esat_solver_set_plugin(s, "pythagorean"));
  if (o.dyn_sym) {
    if (o.generators.empty())
      throw std::runtime_error("--dyn-sym-exploit requires --generators");
    check(esat_solver_load_generators(s, o.generators.c_str()));
  } else if (!o.generators.empty()) {
    throw std::runtime_error("--generators requires --dyn-sym-exploit");
  }
  check(esat_solver_set_option(s, "filter_x", o.filter_x));
  check(esat_solver_set_option(s, "size_cap", o.max_size));
  check(esat_solver_set_option(s, "lbd_cap", o.lbd_cap));
  check(esat_solver_set_option(s, "max_eclauses", static_cast<double>(o.max_eclauses)));
  check(esat_solver_set_option(s, "examine_cap", static_cast<double>(o.examine_cap)));
  check(esat_solver_set_option(s, "eclause_activity", o.eclause_activity));
  check(esat_solver_set_option(s, "deletion_ratio", o.deletion_ratio));
  check(esat_solver_set_option(s, "restart_base", o.restart_base));
  check(esat_solver_set_option(s, "local_reduce_interval",
                               static_cast<double>(o.reduce_interval)));
  check(esat_solver_set_option(s, "tier2_interval",
                               static_cast<double>(o.tier2_interval)));
  check(esat_solver_set_option(s, "tier2_untouched",
                               static_cast<double>(o.tier2_untouched)));
  check(esat_solver_set_option(s, "seed", static_cast<double>(o.seed)));
  check(esat_solver_set_option(s, "timeout", o.timeout));
  check(esat_solver_set_option(s, "max_conflicts", static_cast<double>(o.max_conflicts)));
  check(esat_solver_set_option(s, "no_filtering", o.no_filtering ? 1 : 0));
  check(esat_solver_set_option(s, "bin_res_minimize", o.bin_min ? 1 : 0));
}

FormulaPtr load_instance(const std::string& cnf, const std::string& sidecar,
                         const std::string& nonsym) {
  FormulaPtr f = make_formula();
  check(esat_formula_read_dimacs(f.get(), cnf.c_str()));
  if (!sidecar.empty()) check(esat_formula_load_sidecar(f.get(), sidecar.c_str()));
  if (!nonsym.empty()) check(esat_formula_append_nonsym(f.get(), nonsym.c_str()));
  return f;
}

const char* outcome_name(int rc) {
  switch (rc) {
    case ESAT_SAT: return "SAT";
    case ESAT_UNSAT: return "UNSAT";
    default: return "TIMEOUT";
  }
}

const std::vector<std::string>& stat_names() {
  static const std::vector<std::string> names = {
      "conflicts", "decisions", "propagations", "restarts", "reductions",
      "tier2_scans", "eclauses_generated", "eclauses_filtered", "eclauses_added",
      "eclauses_live", "eclauses_family", "conflict_clauses_live",
      "tainted_level0", "ended_at_conflict"};
  return names;
}

std::vector<int32_t> fetch_model(esat_solver* s) {
  int n = esat_solver_model(s, nullptr, 0);
  check(n);
  std::vector<int32_t> lits(static_cast<size_t>(n));
  if (n > 0) check(esat_solver_model(s, lits.data(), n));
  return lits;
}

/* ------------------------------------------------------------------ */
/* gen                                                                 */
/* ------------------------------------------------------------------ */

int run_gen(const esat_formula* f, const std::string& out, const std::string& meta) {
  if (out.empty()) {
    char* text = esat_formula_to_dimacs(f);
    if (!text) throw std::runtime_error(esat_last_error());
    std::fputs(text, stdout);
    esat_string_free(text);
  } else {
    check(esat_formula_write_dimacs(f, out.c_str()));
  }
  if (!meta.empty()) check(esat_formula_write_sidecar(f, meta.c_str()));
  return 0;
}

/* ------------------------------------------------------------------ */
/* solve                                                               */
/* ------------------------------------------------------------------ */

int run_solve(const std::string& cnf, const std::string& sidecar,
              const std::string& nonsym, const SolveOptions& opts,
              const std::string& report, const std::string& model_out) {
  FormulaPtr f = load_instance(cnf, sidecar, nonsym);
  SolverPtr s = make_solver();
  apply_solve_options(s.get(), opts);

  int rc = esat_solver_solve(s.get(), f.get());
  check(rc);

  std::vector<int32_t> model;
  if (rc == ESAT_SAT) model = fetch_model(s.get());

  if (report == "json") {
    nlohmann::ordered_json j;
    j["outcome"] = outcome_name(rc);
    j["time"] = esat_solver_stat_time(s.get(), "total");
    j["overhead"] = esat_solver_stat_time(s.get(), "overhead");
    for (const std::string& name : stat_names())
      j[name] = esat_solver_stat(s.get(), name.c_str());
    if (rc == ESAT_SAT) j["model"] = model;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("c time %.3f\n", esat_solver_stat_time(s.get(), "total"));
    std::printf("c overhead %.3f\n", esat_solver_stat_time(s.get(), "overhead"));
    for (const std::string& name : stat_names())
      std::printf("c %s %lld\n", name.c_str(),
                  static_cast<long long>(esat_solver_stat(s.get(), name.c_str())));
    if (rc == ESAT_SAT) {
      std::printf("s SATISFIABLE\nv");
      for (int32_t l : model) std::printf(" %d", l);
      std::printf(" 0\n");
    } else if (rc == ESAT_UNSAT) {
      std::printf("s UNSATISFIABLE\n");
    } else {
      std::printf("s UNKNOWN\n");
    }
  }

  if (!model_out.empty() && rc == ESAT_SAT) {
    std::string text;
    for (int32_t l : model) {
      text += std::to_string(l);
      text += ' ';
    }
    text += "0\n";
    write_text_file(model_out, text);
  }
  return rc;
}

/* ------------------------------------------------------------------ */
/* verify                                                              */
/* ------------------------------------------------------------------ */

std::vector<int32_t> parse_literals(const std::string& text) {
  std::vector<int32_t> lits;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok == "s") continue;
    std::istringstream again(line);
    while (again >> tok) {
      if (tok == "v") continue;
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::runtime_error("bad token in literal file: " + tok);
      if (v != 0) lits.push_back(static_cast<int32_t>(v));
    }
  }
  return lits;
}

std::vector<std::vector<int32_t>> parse_clause_file(const std::string& text) {
  std::vector<std::vector<int32_t>> clauses;
  std::vector<int32_t> cur;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && (tok == "c" || tok[0] == 'c')) continue;
    std::istringstream again(line);
    while (again >> tok) {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::runtime_error("bad token in clause file: " + tok);
      if (v == 0) {
        clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<int32_t>(v));
      }
    }
  }
  if (!cur.empty()) throw std::runtime_error("clause file ends without a terminating 0");
  return clauses;
}

int run_verify(const std::string& cnf, const std::string& sidecar,
               const std::string& model_path, const std::string& eclauses_path,
               bool glide, int64_t budget) {
  FormulaPtr f = load_instance(cnf, sidecar, "");
  bool all_ok = true;

  if (!model_path.empty()) {
    std::vector<int32_t> lits = parse_literals(read_text_file(model_path));
    int rc = esat_check_model(f.get(), lits.data(), static_cast<int>(lits.size()));
    check(rc);
    if (rc == 1) {
      std::printf("MODEL PASS\n");
    } else {
      std::printf("MODEL FAIL\n");
      all_ok = false;
    }
  }

  if (!eclauses_path.empty()) {
    auto clauses = parse_clause_file(read_text_file(eclauses_path));
    size_t implied = 0, unknown = 0;
    for (const auto& c : clauses) {
      int rc = esat_check_implied(f.get(), c.data(), static_cast<int>(c.size()), budget);
      check(rc);
      if (rc == ESAT_IMPLIED) {
        ++implied;
        continue;
      }
      std::string text;
      for (int32_t l : c) text += std::to_string(l) + " ";
      if (rc == ESAT_UNKNOWN) {
        ++unknown;
        std::printf("UNDECIDED (budget %lld): %s0\n", static_cast<long long>(budget),
                    text.c_str());
      } else {
        std::printf("NOT IMPLIED: %s0\n", text.c_str());
      }
    }
    if (implied == clauses.size()) {
      std::printf("ECLAUSES PASS (%zu/%zu implied)\n", implied, clauses.size());
    } else {
      std::printf("ECLAUSES FAIL (%zu/%zu implied, %zu undecided)\n", implied,
                  clauses.size(), unknown);
      all_ok = false;
    }
  }

  if (glide) {
    char* report = nullptr;
    int rc = esat_glide_check(f.get(), &report);
    check(rc);
    if (rc == 0) {
      std::printf("GLIDE PASS\n");
    } else {
      if (report) std::fputs(report, stdout);
      std::printf("GLIDE FAIL (%d violations)\n", rc);
      all_ok = false;
    }
    esat_string_free(report);
  }

  return all_ok ? 0 : 1;
}

/* ------------------------------------------------------------------ */
/* bench                                                               */
/* ------------------------------------------------------------------ */

SolveOptions parse_config_flags(const esat::bench::Config& cfg) {
  CLI::App app{"config"};
  SolveOptions opts;
  add_solve_options(app, opts);
  std::vector<std::string> args(cfg.flags.rbegin(), cfg.flags.rend());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    throw std::runtime_error("config \"" + cfg.name + "\": " + e.what());
  }
  return opts;
}

int run_bench(const std::string& manifest_path, const std::string& from_records,
              double timeout_override, int jobs, const std::string& records_out,
              const std::string& table_out) {
  std::vector<esat::bench::Record> records;
  double timeout = 0;

  if (!from_records.empty()) {
    records = esat::bench::parse_records(read_text_file(from_records), timeout);
  } else {
    esat::bench::Manifest m = esat::bench::parse_manifest(read_text_file(manifest_path));
    if (timeout_override > 0) m.timeout = timeout_override;
    timeout = m.timeout;

    std::vector<SolveOptions> config_opts;
    config_opts.reserve(m.configs.size());
    for (const auto& cfg : m.configs) config_opts.push_back(parse_config_flags(cfg));

    struct Task {
      size_t inst, cfg;
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < m.instances.size(); ++i)
      for (size_t c = 0; c < m.configs.size(); ++c) tasks.push_back({i, c});

    records.resize(tasks.size());
    std::atomic<size_t> next{0};
    std::mutex io_mutex;
    std::string first_error;

    auto worker = [&] {
      for (;;) {
        size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        const auto& inst = m.instances[tasks[t].inst];
        const auto& cfg = m.configs[tasks[t].cfg];
        try {
          FormulaPtr f = load_instance(inst.cnf, inst.sidecar, inst.nonsym);
          SolverPtr s = make_solver();
          apply_solve_options(s.get(), config_opts[tasks[t].cfg]);
          check(esat_solver_set_option(s.get(), "timeout", m.timeout));
          int rc = esat_solver_solve(s.get(), f.get());
          check(rc);
          esat::bench::Record& r = records[t];
          r.instance = inst.name;
          r.config = cfg.name;
          r.outcome = outcome_name(rc);
          r.time = esat_solver_stat_time(s.get(), "total");
          r.overhead = esat_solver_stat_time(s.get(), "overhead");
          r.conflicts = esat_solver_stat(s.get(), "conflicts");
          r.eclauses_added = esat_solver_stat(s.get(), "eclauses_added");
          r.eclauses_live = esat_solver_stat(s.get(), "eclauses_live");
          r.eclauses_family = esat_solver_stat(s.get(), "eclauses_family");
          r.conflict_clauses_live = esat_solver_stat(s.get(), "conflict_clauses_live");
          std::lock_guard<std::mutex> lock(io_mutex);
          std::fprintf(stderr, "c [%zu/%zu] %s / %s: %s %.2fs\n", t + 1, tasks.size(),
                       inst.name.c_str(), cfg.name.c_str(), r.outcome.c_str(), r.time);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(io_mutex);
          if (first_error.empty())
            first_error = inst.name + " / " + cfg.name + ": " + e.what();
        }
      }
    };

    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!first_error.empty()) throw std::runtime_error(first_error);
  }

  if (!records_out.empty())
    write_text_file(records_out, esat::bench::serialize_records(timeout, records));

  std::string table = esat::bench::render_table(esat::bench::aggregate(records, timeout));
  if (table_out.empty())
    std::fputs(table.c_str(), stdout);
  else
    write_text_file(table_out, table);
  return 0;
}

}  // namespace

/* ------------------------------------------------------------------ */

int main(int argc, char** argv) {
  CLI::App app{"esat — SAT solving with symmetry-derived extra clauses"};
  app.set_version_flag("--version", esat_version());
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance and its metadata");
  gen->require_subcommand(1);
  int gj = 0, gk = 0, gn = -1;
  std::string gen_out, gen_meta;
  auto* gw = gen->add_subcommand("waerden",
                                 "progression-free two-coloring of 1..n");
  gw->add_option("-j", gj, "forbidden progression length in color 0")->required();
  gw->add_option("-k", gk, "forbidden progression length in color 1")->required();
  gw->add_option("-n", gn, "universe size")->required();
  gw->add_option("-o,--out", gen_out, "output DIMACS path (default stdout)");
  gw->add_option("--meta", gen_meta, "also write the metadata sidecar here");
  auto* gp = gen->add_subcommand("pythagorean",
                                 "monochromatic-triple-free two-coloring of 1..n");
  gp->add_option("-n", gn, "universe size")->required();
  gp->add_option("-o,--out", gen_out, "output DIMACS path (default stdout)");
  gp->add_option("--meta", gen_meta, "also write the metadata sidecar here");

  // solve
  auto* solve = app.add_subcommand("solve", "solve a DIMACS instance");
  std::string cnf_path, sidecar_path, nonsym_path, report = "text", model_out;
  SolveOptions opts;
  solve->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  solve->add_option("--sidecar", sidecar_path, "metadata sidecar file");
  solve->add_option("--nonsym", nonsym_path,
                    "extra clauses to append, marked non-symmetric");
  add_solve_options(*solve, opts);
  solve->add_option("--report", report, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--model", model_out, "write a model file when satisfiable");

  // verify
  auto* verify = app.add_subcommand("verify", "check models, implied clauses, bounds");
  std::string v_cnf, v_sidecar, v_model, v_eclauses;
  bool v_glide = false;
  int64_t v_budget = 1000000;
  verify->add_option("cnf", v_cnf, "DIMACS CNF file")->required();
  verify->add_option("--sidecar", v_sidecar, "metadata sidecar file");
  verify->add_option("--model", v_model, "model file to check against the formula");
  verify->add_option("--eclauses", v_eclauses,
                     "clause file; each clause is checked to be implied");
  verify->add_flag("--glide", v_glide,
                   "audit gliding bounds by set membership (needs --sidecar)");
  verify->add_option("--budget", v_budget, "conflict budget per implication check");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark manifest");
  std::string manifest_path, from_records, records_out, table_out;
  double timeout_override = 0;
  int jobs = 1;
  bench->add_option("manifest", manifest_path, "benchmark manifest (JSON)");
  bench->add_option("--from-records", from_records,
                    "skip solving; aggregate an existing records file");
  bench->add_option("--timeout", timeout_override, "override the manifest timeout");
  bench->add_option("--jobs", jobs, "parallel runs");
  bench->add_option("--records", records_out, "write per-run records (JSON) here");
  bench->add_option("--table", table_out, "write the summary table here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gw->parsed() || gp->parsed()) {
      FormulaPtr f = make_formula();
      if (gw->parsed())
        check(esat_generate_waerden(f.get(), gj, gk, gn));
      else
        check(esat_generate_pythagorean(f.get(), gn));
      return run_gen(f.get(), gen_out, gen_meta);
    }
    if (solve->parsed())
      return run_solve(cnf_path, sidecar_path, nonsym_path, opts, report, model_out);
    if (verify->parsed()) {
      if (v_model.empty() && v_eclauses.empty() && !v_glide)
        throw std::runtime_error("verify: nothing to do (--model, --eclauses, or --glide)");
      if (v_glide && v_sidecar.empty())
        throw std::runtime_error("verify --glide needs --sidecar (bounds live there)");
      return run_verify(v_cnf, v_sidecar, v_model, v_eclauses, v_glide, v_budget);
    }
    if (bench->parsed()) {
      if (manifest_path.empty() == from_records.empty())
        throw std::runtime_error("bench: give a manifest or --from-records (not both)");
      return run_bench(manifest_path, from_records, timeout_override, jobs, records_out,
                       table_out);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "esat: %s\n", e.what());
    return 1;
  }
  return 0;
}
