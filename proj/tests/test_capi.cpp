#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "esat.h"

namespace {

struct Formula {
  esat_formula* p;
  Formula() : p(esat_formula_new()) { REQUIRE(p != nullptr); }
  ~Formula() { esat_formula_free(p); }
};

struct Solver {
  esat_solver* p;
  Solver() : p(esat_solver_new()) { REQUIRE(p != nullptr); }
  ~Solver() { esat_solver_free(p); }
};

std::string temp_path(const char* name) {
  return std::string("/tmp/esat_capi_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(esat_version() != nullptr);
  Formula f;
  CHECK(esat_formula_parse_dimacs(f.p, "not dimacs") == ESAT_ERROR);
  CHECK(std::strlen(esat_last_error()) > 0);
  CHECK(esat_formula_parse_dimacs(nullptr, "x") == ESAT_ERROR);
}

TEST_CASE("formula round trip") {
  Formula f;
  REQUIRE(esat_formula_parse_dimacs(f.p, "p cnf 3 2\n1 -2 0\n-1 3 0\n") == ESAT_OK);
  CHECK(esat_formula_num_vars(f.p) == 3);
  CHECK(esat_formula_num_clauses(f.p) == 2);
  char* text = esat_formula_to_dimacs(f.p);
  REQUIRE(text != nullptr);
  CHECK(std::string(text) == "p cnf 3 2\n1 -2 0\n-1 3 0\n");
  esat_string_free(text);

  std::string path = temp_path("roundtrip.cnf");
  REQUIRE(esat_formula_write_dimacs(f.p, path.c_str()) == ESAT_OK);
  Formula g;
  REQUIRE(esat_formula_read_dimacs(g.p, path.c_str()) == ESAT_OK);
  CHECK(esat_formula_num_clauses(g.p) == 2);
  std::remove(path.c_str());
  CHECK(esat_formula_read_dimacs(g.p, "/nonexistent/nope.cnf") == ESAT_ERROR);
}

TEST_CASE("generators and sidecars") {
  Formula f;
  REQUIRE(esat_generate_waerden(f.p, 3, 3, 9) == ESAT_OK);
  CHECK(esat_formula_num_vars(f.p) == 9);
  CHECK(esat_formula_num_clauses(f.p) == 32);
  CHECK(esat_generate_waerden(f.p, 1, 3, 9) == ESAT_ERROR);

  std::string meta = temp_path("w9.meta");
  REQUIRE(esat_formula_write_sidecar(f.p, meta.c_str()) == ESAT_OK);
  Formula g;
  REQUIRE(esat_generate_waerden(g.p, 3, 3, 9) == ESAT_OK);
  REQUIRE(esat_formula_load_sidecar(g.p, meta.c_str()) == ESAT_OK);
  CHECK(esat_glide_check(g.p, nullptr) == 0);
  std::remove(meta.c_str());

  Formula p;
  REQUIRE(esat_generate_pythagorean(p.p, 17) == ESAT_OK);
  CHECK(esat_formula_num_clauses(p.p) == 10);

  std::string nonsym = temp_path("extra.cnf");
  write_file(nonsym, "5 0\n");
  REQUIRE(esat_formula_append_nonsym(f.p, nonsym.c_str()) == ESAT_OK);
  CHECK(esat_formula_num_clauses(f.p) == 33);
  std::remove(nonsym.c_str());
}

TEST_CASE("solving through the shared library") {
  Formula sat, unsat;
  REQUIRE(esat_generate_waerden(sat.p, 3, 3, 8) == ESAT_OK);
  REQUIRE(esat_generate_waerden(unsat.p, 3, 3, 9) == ESAT_OK);

  Solver s;
  CHECK(esat_solver_set_plugin(s.p, "gliding") == ESAT_OK);
  CHECK(esat_solver_set_plugin(s.p, "frobnicate") == ESAT_ERROR);
  CHECK(esat_solver_set_option(s.p, "restart_base", 1) == ESAT_OK);
  CHECK(esat_solver_set_option(s.p, "no_such_option", 1) == ESAT_ERROR);

  CHECK(esat_solver_solve(s.p, sat.p) == ESAT_SAT);
  int n = esat_solver_model(s.p, nullptr, 0);
  REQUIRE(n == 8);
  std::vector<int32_t> model(8);
  REQUIRE(esat_solver_model(s.p, model.data(), 8) == 8);
  CHECK(esat_check_model(sat.p, model.data(), 8) == 1);
  std::vector<int32_t> small(2);
  CHECK(esat_solver_model(s.p, small.data(), 2) == ESAT_ERROR);

  CHECK(esat_solver_solve(s.p, unsat.p) == ESAT_UNSAT);
  CHECK(esat_solver_model(s.p, nullptr, 0) == 0);  // no model after UNSAT
  CHECK(esat_solver_stat(s.p, "conflicts") > 0);
  CHECK(esat_solver_stat(s.p, "ended_at_conflict") == 1);
  CHECK(esat_solver_stat(s.p, "bogus") == ESAT_ERROR);
  CHECK(esat_solver_stat_time(s.p, "total") >= 0.0);
  CHECK(esat_solver_stat_time(s.p, "overhead") >= 0.0);

  Solver limited;
  CHECK(esat_solver_set_option(limited.p, "max_conflicts", 1) == ESAT_OK);
  CHECK(esat_solver_solve(limited.p, unsat.p) == ESAT_TIMEOUT);
}

TEST_CASE("dynamic symmetry generators through the C API") {
  std::string gens = temp_path("gens.txt");
  write_file(gens, "[1 9] [2 8] [3 7] [4 6]\n");
  Formula f;
  REQUIRE(esat_generate_waerden(f.p, 3, 3, 9) == ESAT_OK);
  Solver s;
  REQUIRE(esat_solver_load_generators(s.p, gens.c_str()) == ESAT_OK);
  CHECK(esat_solver_load_generators(s.p, "/nonexistent/gens") == ESAT_ERROR);
  CHECK(esat_solver_set_option(s.p, "restart_base", 1) == ESAT_OK);
  CHECK(esat_solver_solve(s.p, f.p) == ESAT_UNSAT);
  CHECK(esat_solver_stat(s.p, "eclauses_generated") > 0);
  std::remove(gens.c_str());
}

TEST_CASE("verification entry points") {
  Formula f;
  REQUIRE(esat_formula_parse_dimacs(f.p, "p cnf 2 1\n1 2 0\n") == ESAT_OK);
  int32_t good[] = {1, -2};
  int32_t bad[] = {-1, -2};
  CHECK(esat_check_model(f.p, good, 2) == 1);
  CHECK(esat_check_model(f.p, bad, 2) == 0);
  int32_t partial[] = {1};
  CHECK(esat_check_model(f.p, partial, 1) == ESAT_ERROR);

  int32_t sup[] = {1, 2};
  CHECK(esat_check_implied(f.p, sup, 2, 1000) == ESAT_IMPLIED);
  int32_t unit[] = {1};
  CHECK(esat_check_implied(f.p, unit, 1, 1000) == ESAT_NOT_IMPLIED);

  Formula u;
  REQUIRE(esat_generate_waerden(u.p, 3, 3, 9) == ESAT_OK);
  CHECK(esat_check_implied(u.p, unit, 1, 0) == ESAT_UNKNOWN);
  CHECK(esat_brute_force(u.p) == ESAT_UNSAT);
  Formula sat;
  REQUIRE(esat_generate_waerden(sat.p, 3, 3, 8) == ESAT_OK);
  CHECK(esat_brute_force(sat.p) == ESAT_SAT);

  char* report = nullptr;
  CHECK(esat_glide_check(sat.p, &report) == 0);
  REQUIRE(report != nullptr);
  CHECK(report[0] == '\0');
  esat_string_free(report);
}
