// C ABI wrapper around the C++ core.  Every entry point converts
// exceptions into negative return codes and stashes the message in a
// thread-local buffer readable through esat_last_error().

#include "esat.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/formula.hpp"
#include "core/generators.hpp"
#include "core/permutation.hpp"
#include "core/sidecar.hpp"
#include "core/solver.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string &msg) { g_last_error = msg; }

template <typename Fn> int guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const std::exception &e) {
    set_error(e.what());
    return ESAT_ERROR;
  } catch (...) {
    set_error("unknown error");
    return ESAT_ERROR;
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

struct esat_formula {
  esat::Formula f;
};

struct esat_solver {
  esat::SolverConfig config;
  std::vector<esat::Permutation> generators;
  bool has_generators = false;
  esat::SolveReport report;
  bool solved = false;
};

extern "C" {

const char *esat_version(void) { return "1.0.0"; }

const char *esat_last_error(void) { return g_last_error.c_str(); }

void esat_string_free(char *s) { std::free(s); }

/* ------------------------------------------------------------------ */

esat_formula *esat_formula_new(void) {
  try {
    return new esat_formula();
  } catch (...) {
    set_error("out of memory");
    return nullptr;
  }
}

void esat_formula_free(esat_formula *f) { delete f; }

int esat_formula_parse_dimacs(esat_formula *f, const char *text) {
  return guarded([&] {
    if (!f || !text) throw esat::Error("null argument");
    f->f = esat::parse_dimacs(text);
    return ESAT_OK;
  });
}

int esat_formula_read_dimacs(esat_formula *f, const char *path) {
  return guarded([&] {
    if (!f || !path) throw esat::Error("null argument");
    f->f = esat::read_dimacs_file(path);
    return ESAT_OK;
  });
}

int esat_formula_write_dimacs(const esat_formula *f, const char *path) {
  return guarded([&] {
    if (!f || !path) throw esat::Error("null argument");
    esat::write_dimacs_file(f->f, path);
    return ESAT_OK;
  });
}

char *esat_formula_to_dimacs(const esat_formula *f) {
  if (!f) {
    set_error("null argument");
    return nullptr;
  }
  try {
    return dup_string(esat::write_dimacs(f->f));
  } catch (const std::exception &e) {
    set_error(e.what());
    return nullptr;
  }
}

int esat_formula_load_sidecar(esat_formula *f, const char *path) {
  return guarded([&] {
    if (!f || !path) throw esat::Error("null argument");
    esat::load_sidecar_file(f->f, path);
    return ESAT_OK;
  });
}

int esat_formula_write_sidecar(const esat_formula *f, const char *path) {
  return guarded([&] {
    if (!f || !path) throw esat::Error("null argument");
    esat::write_sidecar_file(f->f, path);
    return ESAT_OK;
  });
}

int esat_formula_append_nonsym(esat_formula *f, const char *path) {
  return guarded([&] {
    if (!f || !path) throw esat::Error("null argument");
    esat::append_nonsym_file(f->f, path);
    return ESAT_OK;
  });
}

int esat_formula_num_vars(const esat_formula *f) {
  if (!f) {
    set_error("null argument");
    return ESAT_ERROR;
  }
  return f->f.num_vars();
}

int64_t esat_formula_num_clauses(const esat_formula *f) {
  if (!f) {
    set_error("null argument");
    return ESAT_ERROR;
  }
  return static_cast<int64_t>(f->f.num_clauses());
}

int esat_generate_waerden(esat_formula *f, int j, int k, int n) {
  return guarded([&] {
    if (!f) throw esat::Error("null argument");
    f->f = esat::gen_vdw(j, k, n);
    return ESAT_OK;
  });
}

int esat_generate_pythagorean(esat_formula *f, int n) {
  return guarded([&] {
    if (!f) throw esat::Error("null argument");
    f->f = esat::gen_pythagorean(n);
    return ESAT_OK;
  });
}

/* ------------------------------------------------------------------ */

esat_solver *esat_solver_new(void) {
  try {
    return new esat_solver();
  } catch (...) {
    set_error("out of memory");
    return nullptr;
  }
}

void esat_solver_free(esat_solver *s) { delete s; }

int esat_solver_set_plugin(esat_solver *s, const char *name) {
  return guarded([&] {
    if (!s || !name) throw esat::Error("null argument");
    std::string p = name;
    if (p == "none")
      s->config.plugin = esat::Plugin::None;
    else if (p == "gliding")
      s->config.plugin = esat::Plugin::Gliding;
    else if (p == "pythagorean")
      s->config.plugin = esat::Plugin::Pythagorean;
    else
      throw esat::Error("unknown plugin: " + p);
    return ESAT_OK;
  });
}

int esat_solver_load_generators(esat_solver *s, const char *path) {
  return guarded([&] {
    if (!s || !path) throw esat::Error("null argument");
    std::ifstream in(path);
    if (!in) throw esat::Error(std::string("cannot open ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    s->generators = esat::parse_generators(buf.str());
    s->has_generators = true;
    return ESAT_OK;
  });
}

int esat_solver_set_option(esat_solver *s, const char *name, double value) {
  return guarded([&] {
    if (!s || !name) throw esat::Error("null argument");
    std::string k = name;
    auto &c = s->config;
    if (k == "seed")
      c.seed = static_cast<uint64_t>(value);
    else if (k == "timeout")
      c.timeout_seconds = value;
    else if (k == "max_conflicts")
      c.max_conflicts = static_cast<int64_t>(value);
    else if (k == "restart_base")
      c.restart_base = static_cast<int>(value);
    else if (k == "filter_x")
      c.filter_x = static_cast<int>(value);
    else if (k == "lbd_cap")
      c.lbd_cap = static_cast<int>(value);
    else if (k == "size_cap")
      c.size_cap = static_cast<int>(value);
    else if (k == "max_eclauses")
      c.max_eclauses = static_cast<int64_t>(value);
    else if (k == "examine_cap")
      c.examine_cap = static_cast<int64_t>(value);
    else if (k == "eclause_activity")
      c.eclause_activity = value;
    else if (k == "deletion_ratio")
      c.deletion_ratio = value;
    else if (k == "no_filtering")
      c.no_filtering = value != 0.0;
    else if (k == "local_reduce_interval")
      c.local_reduce_interval = static_cast<int64_t>(value);
    else if (k == "tier2_interval")
      c.tier2_interval = static_cast<int64_t>(value);
    else if (k == "tier2_untouched")
      c.tier2_untouched = static_cast<int64_t>(value);
    else if (k == "bin_res_minimize")
      c.bin_res_minimize = value != 0.0;
    else if (k == "capture_queue")
      c.capture_queue = value != 0.0;
    else if (k == "capture_learned")
      c.capture_learned = value != 0.0;
    else if (k == "debug_checks")
      c.debug_checks = value != 0.0;
    else
      throw esat::Error("unknown option: " + k);
    return ESAT_OK;
  });
}

int esat_solver_solve(esat_solver *s, const esat_formula *f) {
  return guarded([&] {
    if (!s || !f) throw esat::Error("null argument");
    esat::SolverConfig cfg = s->config;
    if (s->has_generators) {
      cfg.dyn_sym = true;
      cfg.generators = s->generators;
    }
    esat::Solver solver(f->f, cfg);
    s->report = solver.solve();
    s->solved = true;
    switch (s->report.outcome) {
    case esat::Outcome::Sat:
      return ESAT_SAT;
    case esat::Outcome::Unsat:
      return ESAT_UNSAT;
    case esat::Outcome::Timeout:
      return ESAT_TIMEOUT;
    }
    throw esat::Error("internal: unknown outcome");
  });
}

int esat_solver_model(const esat_solver *s, int32_t *lits, int capacity) {
  if (!s) {
    set_error("null argument");
    return ESAT_ERROR;
  }
  if (!s->solved || s->report.outcome != esat::Outcome::Sat) return 0;
  const auto &m = s->report.model;
  int n = static_cast<int>(m.size());
  if (lits) {
    if (capacity < n) {
      set_error("model buffer too small");
      return ESAT_ERROR;
    }
    for (int i = 0; i < n; ++i) lits[i] = m[static_cast<size_t>(i)];
  }
  return n;
}

int64_t esat_solver_stat(const esat_solver *s, const char *name) {
  if (!s || !name) {
    set_error("null argument");
    return ESAT_ERROR;
  }
  const auto &r = s->report;
  std::string k = name;
  if (k == "conflicts") return r.conflicts;
  if (k == "decisions") return r.decisions;
  if (k == "propagations") return r.propagations;
  if (k == "restarts") return r.restarts;
  if (k == "reductions") return r.reductions;
  if (k == "tier2_scans") return r.tier2_scans;
  if (k == "eclauses_generated") return r.eclauses_generated;
  if (k == "eclauses_filtered") return r.eclauses_filtered;
  if (k == "eclauses_added") return r.eclauses_added;
  if (k == "eclauses_live") return r.eclauses_live;
  if (k == "eclauses_family") return r.eclauses_family;
  if (k == "conflict_clauses_live") return r.conflict_clauses_live;
  if (k == "tainted_level0") return r.tainted_level0;
  if (k == "debug_taint_violations") return r.debug_taint_violations;
  if (k == "debug_fold_gaps") return r.debug_fold_gaps;
  if (k == "ended_at_conflict") return r.ended_at_conflict ? 1 : 0;
  set_error("unknown statistic: " + k);
  return ESAT_ERROR;
}

double esat_solver_stat_time(const esat_solver *s, const char *name) {
  if (!s || !name) {
    set_error("null argument");
    return -1.0;
  }
  std::string k = name;
  if (k == "total") return s->report.total_time;
  if (k == "overhead") return s->report.eclause_overhead_time;
  set_error("unknown time statistic: " + k);
  return -1.0;
}

/* ------------------------------------------------------------------ */

int esat_check_model(const esat_formula *f, const int32_t *lits, int count) {
  return guarded([&] {
    if (!f || (!lits && count > 0)) throw esat::Error("null argument");
    std::vector<esat::Lit> model(lits, lits + count);
    return esat::check_model(f->f, model) ? 1 : 0;
  });
}

int esat_check_implied(const esat_formula *f, const int32_t *lits, int count,
                       int64_t max_conflicts) {
  return guarded([&] {
    if (!f || (!lits && count > 0)) throw esat::Error("null argument");
    esat::Clause c(lits, lits + count);
    switch (esat::check_implied(f->f, c, max_conflicts)) {
    case esat::Implied::Yes:
      return ESAT_IMPLIED;
    case esat::Implied::No:
      return ESAT_NOT_IMPLIED;
    case esat::Implied::Unknown:
      return ESAT_UNKNOWN;
    }
    throw esat::Error("internal: unknown implication result");
  });
}

int esat_brute_force(const esat_formula *f) {
  return guarded([&] {
    if (!f) throw esat::Error("null argument");
    return esat::brute_force_sat(f->f, nullptr) ? ESAT_SAT : ESAT_UNSAT;
  });
}

int esat_glide_check(const esat_formula *f, char **report) {
  return guarded([&] {
    if (!f) throw esat::Error("null argument");
    std::vector<esat::GlideViolation> violations =
        esat::glide_membership_oracle(f->f);
    if (report) {
      std::string text;
      for (const auto &v : violations) {
        text += esat::describe(f->f, v);
        text += '\n';
      }
      *report = dup_string(text);
      if (!*report) throw esat::Error("out of memory");
    }
    return static_cast<int>(violations.size());
  });
}

} // extern "C"
