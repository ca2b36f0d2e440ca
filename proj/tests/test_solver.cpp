#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/schedule.hpp"
#include "core/solver.hpp"
#include "core/verify.hpp"

using namespace esat;

TEST_CASE("luby sequence") {
  std::vector<int64_t> expect = {1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8};
  for (size_t i = 0; i < expect.size(); ++i) {
    CAPTURE(i);
    CHECK(luby(static_cast<int64_t>(i) + 1) == expect[i]);
  }
  CHECK(luby(31) == 16);
  CHECK(restart_schedule(3, 100) == 200);
  CHECK(restart_schedule(1, 100) == 100);
}

TEST_CASE("deletion policy") {
  auto cand = [](double act, bool locked, uint32_t id) {
    return DeletionCandidate{act, locked, id};
  };
  SUBCASE("least active go first, floor quota") {
    std::vector<DeletionCandidate> cs = {cand(5, false, 0), cand(1, false, 1),
                                         cand(3, false, 2), cand(2, false, 3),
                                         cand(4, false, 4)};
    // floor(0.5 * 5) = 2: the two least active
    auto del = select_for_deletion(cs, 0.5);
    CHECK(del == std::vector<uint32_t>{1, 3});
  }
  SUBCASE("locked clauses survive but count toward the quota base") {
    std::vector<DeletionCandidate> cs = {cand(1, true, 0), cand(2, false, 1),
                                         cand(3, false, 2), cand(4, false, 3)};
    auto del = select_for_deletion(cs, 0.5);  // quota 2, id 0 locked
    CHECK(del == std::vector<uint32_t>{1, 2});
  }
  SUBCASE("ties break by id for determinism") {
    std::vector<DeletionCandidate> cs = {cand(1, false, 7), cand(1, false, 3),
                                         cand(1, false, 5)};
    auto del = select_for_deletion(cs, 0.8);  // quota 2
    CHECK(del == std::vector<uint32_t>{3, 5});
  }
  SUBCASE("ratio clamps") {
    std::vector<DeletionCandidate> cs = {cand(1, false, 0), cand(2, false, 1)};
    CHECK(select_for_deletion(cs, 2.0).size() == 2);
    CHECK(select_for_deletion(cs, -1.0).empty());
  }
}

TEST_CASE("scripted propagation") {
  Formula f(3);
  f.add_clause({1, 2, 3});
  Solver s(f, SolverConfig{});
  CHECK(s.decision_level() == 0);
  CHECK(s.value(3) == 0);
  s.decide(-1);
  CHECK(s.decision_level() == 1);
  REQUIRE(s.propagate_to_fixpoint());
  CHECK(s.value(3) == 0);  // clause not yet unit
  s.decide(-2);
  REQUIRE(s.propagate_to_fixpoint());
  CHECK(s.value(3) == +1);  // (1 2 3) became unit
  CHECK(s.value(-3) == -1);
}

TEST_CASE("scripted conflict detection") {
  Formula f(2);
  f.add_clause({1, 2});
  f.add_clause({1, -2});
  Solver s(f, SolverConfig{});
  s.decide(-1);
  CHECK_FALSE(s.propagate_to_fixpoint());
}

TEST_CASE("small verdicts match brute force") {
  Formula sat = gen_vdw(3, 3, 8);
  Formula unsat = gen_vdw(3, 3, 9);
  CHECK(brute_force_sat(sat));
  CHECK_FALSE(brute_force_sat(unsat));

  SolveReport r1 = Solver(sat, SolverConfig{}).solve();
  CHECK(r1.outcome == Outcome::Sat);
  CHECK(check_model(sat, r1.model));

  SolveReport r2 = Solver(unsat, SolverConfig{}).solve();
  CHECK(r2.outcome == Outcome::Unsat);
  CHECK(r2.ended_at_conflict);

  SolveReport r3 = Solver(gen_pythagorean(17), SolverConfig{}).solve();
  CHECK(r3.outcome == Outcome::Sat);
}

TEST_CASE("unit and empty inputs") {
  Formula f(2);
  f.add_clause({1});
  f.add_clause({-1, 2});
  SolveReport r = Solver(f, SolverConfig{}).solve();
  REQUIRE(r.outcome == Outcome::Sat);
  CHECK(r.model == std::vector<Lit>{1, 2});

  Formula g(1);
  g.add_clause({1});
  g.add_clause({-1});
  CHECK(Solver(g, SolverConfig{}).solve().outcome == Outcome::Unsat);

  Formula h(1);
  h.add_clause({});
  CHECK(Solver(h, SolverConfig{}).solve().outcome == Outcome::Unsat);

  Formula e(3);  // no clauses at all
  SolveReport re = Solver(e, SolverConfig{}).solve();
  CHECK(re.outcome == Outcome::Sat);
  CHECK(re.model.size() == 3);
}

TEST_CASE("conflict budget yields a timeout") {
  SolverConfig cfg;
  cfg.max_conflicts = 1;
  SolveReport r = Solver(gen_vdw(3, 3, 9), cfg).solve();
  CHECK(r.outcome == Outcome::Timeout);
  CHECK(r.conflicts == 1);
  CHECK(r.ended_at_conflict);
}

TEST_CASE("determinism: identical runs, identical reports") {
  Formula f = gen_vdw(3, 3, 20);
  SolverConfig cfg;
  cfg.seed = 7;
  SolveReport a = Solver(f, cfg).solve();
  SolveReport b = Solver(f, cfg).solve();
  CHECK(a.outcome == b.outcome);
  CHECK(a.model == b.model);
  CHECK(a.conflicts == b.conflicts);
  CHECK(a.decisions == b.decisions);
  CHECK(a.propagations == b.propagations);
  CHECK(a.restarts == b.restarts);
  CHECK(a.reductions == b.reductions);
  CHECK(a.eclauses_generated == b.eclauses_generated);
  CHECK(a.eclauses_added == b.eclauses_added);
}

TEST_CASE("learned clauses are implied") {
  Formula f = gen_vdw(3, 3, 9);
  SolverConfig cfg;
  cfg.capture_learned = true;
  SolveReport r = Solver(f, cfg).solve();
  REQUIRE(r.outcome == Outcome::Unsat);
  REQUIRE(!r.captured_learned.empty());
  for (const Clause& c : r.captured_learned) {
    CAPTURE(c.size());
    CHECK(check_implied(f, c) == Implied::Yes);
  }
}

TEST_CASE("random small formulas: solver agrees with brute force") {
  std::mt19937 rng(0xE5A7);
  for (int round = 0; round < 40; ++round) {
    CAPTURE(round);
    int nvars = 3 + static_cast<int>(rng() % 10);  // up to 12
    int nclauses = 5 + static_cast<int>(rng() % 36);
    Formula f(nvars);
    for (int i = 0; i < nclauses; ++i) {
      int len = 1 + static_cast<int>(rng() % 4);
      // sample distinct variables, then random polarities: never tautological
      std::vector<Var> vars;
      while (static_cast<int>(vars.size()) < std::min(len, nvars)) {
        Var v = 1 + static_cast<Var>(rng() % nvars);
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      }
      Clause c;
      for (Var v : vars) c.push_back(rng() % 2 ? v : -v);
      f.add_clause(std::move(c));
    }
    bool expected = brute_force_sat(f);
    SolverConfig cfg;
    cfg.seed = round;
    SolveReport r = Solver(f, cfg).solve();
    REQUIRE(r.outcome == (expected ? Outcome::Sat : Outcome::Unsat));
    if (expected) CHECK(check_model(f, r.model));
  }
}

TEST_CASE("binary-resolution minimization stays sound") {
  std::mt19937 rng(0xB17);
  for (int round = 0; round < 15; ++round) {
    CAPTURE(round);
    int nvars = 4 + static_cast<int>(rng() % 8);
    Formula f(nvars);
    int nclauses = 8 + static_cast<int>(rng() % 30);
    for (int i = 0; i < nclauses; ++i) {
      int len = 1 + static_cast<int>(rng() % 3);  // short clauses: many binaries
      std::vector<Var> vars;
      while (static_cast<int>(vars.size()) < std::min(len, nvars)) {
        Var v = 1 + static_cast<Var>(rng() % nvars);
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      }
      Clause c;
      for (Var v : vars) c.push_back(rng() % 2 ? v : -v);
      f.add_clause(std::move(c));
    }
    bool expected = brute_force_sat(f);
    SolverConfig cfg;
    cfg.bin_res_minimize = true;
    SolveReport r = Solver(f, cfg).solve();
    REQUIRE(r.outcome == (expected ? Outcome::Sat : Outcome::Unsat));
    if (expected) CHECK(check_model(f, r.model));
  }
}

TEST_CASE("reductions and demotions happen under small intervals") {
  SolverConfig cfg;
  cfg.local_reduce_interval = 20;
  cfg.tier2_interval = 15;
  cfg.tier2_untouched = 10;
  cfg.restart_base = 5;
  SolveReport r = Solver(gen_vdw(4, 4, 35), cfg).solve();
  CHECK(r.outcome == Outcome::Unsat);
  CHECK(r.reductions > 0);
  CHECK(r.tier2_scans > 0);
}

TEST_CASE("plugins do not change verdicts") {
  for (auto plugin : {Plugin::Gliding, Plugin::Pythagorean}) {
    SolverConfig cfg;
    cfg.plugin = plugin;
    cfg.restart_base = 1;  // install pending extra clauses as often as possible
    Formula sat = plugin == Plugin::Gliding ? gen_vdw(3, 3, 8) : gen_pythagorean(17);
    Formula uns = plugin == Plugin::Gliding ? gen_vdw(3, 3, 9) : gen_vdw(3, 3, 9);
    SolveReport rs = Solver(sat, cfg).solve();
    REQUIRE(rs.outcome == Outcome::Sat);
    CHECK(check_model(sat, rs.model));
    CHECK(Solver(uns, cfg).solve().outcome == Outcome::Unsat);
  }
}
