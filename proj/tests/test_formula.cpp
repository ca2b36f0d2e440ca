#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/error.hpp"
#include "core/formula.hpp"
#include "core/sidecar.hpp"

using namespace esat;

TEST_CASE("assignment basics") {
  Assignment a(3);
  CHECK(a.num_vars() == 3);
  CHECK(a.value(1) == 0);
  CHECK_FALSE(a.total());
  a.assign(-2);
  CHECK(a.value(2) == -1);
  CHECK(a.value(-2) == +1);
  CHECK(a.has(2));
  CHECK_THROWS_AS(a.assign(2), Error);   // variable already set
  CHECK_THROWS_AS(a.assign(-2), Error);  // even to the same value
  a.assign(1);
  a.assign(3);
  CHECK(a.total());
  a.unassign(2);
  CHECK(a.value(2) == 0);
  CHECK_FALSE(a.total());
}

TEST_CASE("add_clause validation") {
  Formula f(4);
  f.add_clause({1, -2, 4});
  CHECK(f.num_clauses() == 1);
  CHECK(f.clause(0) == Clause{1, -2, 4});
  CHECK(f.meta(0).symmetric);
  CHECK_FALSE(f.meta(0).glide.has_value());

  SUBCASE("duplicate literals merge") {
    f.add_clause({3, 3, -1, 3});
    CHECK(f.clause(1) == Clause{3, -1});
  }
  SUBCASE("tautologies are rejected") { CHECK_THROWS_AS(f.add_clause({1, -1}), Error); }
  SUBCASE("zero literal is rejected") { CHECK_THROWS_AS(f.add_clause({1, 0}), Error); }
  SUBCASE("out-of-range variable is rejected") {
    CHECK_THROWS_AS(f.add_clause({5}), Error);
    CHECK_THROWS_AS(f.add_clause({-5}), Error);
  }
  SUBCASE("empty clause is allowed") {
    f.add_clause({});
    CHECK(f.clause(1).empty());
  }
  SUBCASE("num_vars cannot shrink") {
    f.set_num_vars(6);
    CHECK(f.num_vars() == 6);
    CHECK_THROWS_AS(f.set_num_vars(5), Error);
  }
}

TEST_CASE("dimacs parsing") {
  Formula f = parse_dimacs("c a comment\np cnf 3 2\n1 -2 0\nc mid comment\n-1 2 3 0\n");
  CHECK(f.num_vars() == 3);
  CHECK(f.num_clauses() == 2);
  CHECK(f.clause(0) == Clause{1, -2});
  CHECK(f.clause(1) == Clause{-1, 2, 3});

  SUBCASE("clauses may span lines and share them") {
    Formula g = parse_dimacs("p cnf 2 2\n1\n2 0 -1 -2 0");
    CHECK(g.num_clauses() == 2);
    CHECK(g.clause(0) == Clause{1, 2});
  }
  SUBCASE("header is required before clauses") {
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);
  }
  SUBCASE("only one header") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), Error);
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), Error);
  }
  SUBCASE("bad token") { CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 q 0\n"), Error); }
  SUBCASE("literal out of range") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), Error);
  }
  SUBCASE("clause count must match header") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 0\n2 0\n"), Error);
  }
  SUBCASE("unterminated clause") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), Error);
  }
}

TEST_CASE("dimacs writing round-trips") {
  Formula f(3);
  f.add_clause({1, -2});
  f.add_clause({-1, 2, 3});
  std::string text = write_dimacs(f);
  CHECK(text == "p cnf 3 2\n1 -2 0\n-1 2 3 0\n");
  Formula g = parse_dimacs(text);
  CHECK(g.num_vars() == f.num_vars());
  CHECK(g.clauses() == f.clauses());
}

TEST_CASE("resolution") {
  CHECK(resolve({1, 2}, {-1, 3}, 1) == Clause{2, 3});
  CHECK(resolve({-4, 2}, {4, 2}, 4) == Clause{2});  // duplicates merge
  SUBCASE("pivot must occur with opposite signs") {
    CHECK_THROWS_AS(resolve({1, 2}, {1, 3}, 1), Error);
    CHECK_THROWS_AS(resolve({1, 2}, {-1, 3}, 2), Error);
  }
  SUBCASE("tautological resolvent is an error") {
    CHECK_THROWS_AS(resolve({1, 2}, {-1, -2}, 1), Error);
  }
}

TEST_CASE("evaluation") {
  Assignment a(3);
  a.assign(1);
  a.assign(-2);
  CHECK(eval(Clause{2, 1}, a) == Eval::Satisfied);
  CHECK(eval(Clause{2, -1}, a) == Eval::Falsified);
  CHECK(eval(Clause{2, 3}, a) == Eval::Undetermined);

  Formula f(3);
  f.add_clause({1, 2});
  f.add_clause({2, 3});
  CHECK(eval(f, a) == Eval::Undetermined);  // (2 3) still open through 3
  a.assign(3);
  CHECK(eval(f, a) == Eval::Satisfied);
  a.unassign(3);
  a.assign(-3);
  CHECK(eval(f, a) == Eval::Falsified);  // (2 3) now falsified
}

TEST_CASE("sidecar round-trip") {
  Formula f(10);
  f.add_clause({1, 2, 3}, ClauseMeta{true, false, GlideBounds{0, 7}, std::nullopt});
  f.add_clause({3, 4, 5}, ClauseMeta{true, false, std::nullopt, ScaleCore{1, 5}});
  f.add_clause({5, 6}, ClauseMeta{false, false, std::nullopt, std::nullopt});
  std::string text = write_sidecar(f);
  CHECK(text == "g 0 7\np 1 5\n-\n");

  Formula g(10);
  g.add_clause({1, 2, 3});
  g.add_clause({3, 4, 5});
  g.add_clause({5, 6});
  load_sidecar(g, text);
  CHECK(g.meta(0) == f.meta(0));
  CHECK(g.meta(1) == f.meta(1));
  CHECK(g.meta(2) == f.meta(2));

  SUBCASE("comment rows are skipped") {
    load_sidecar(g, "c note\ng 0 7\np 1 5\nc another\n-\n");
    CHECK(g.meta(0).glide == GlideBounds{0, 7});
  }
  SUBCASE("row count must match clause count") {
    CHECK_THROWS_AS(load_sidecar(g, "g 0 7\np 1 5\n"), Error);
    CHECK_THROWS_AS(load_sidecar(g, "g 0 7\np 1 5\n-\n-\n"), Error);
  }
  SUBCASE("malformed rows") {
    CHECK_THROWS_AS(load_sidecar(g, "g 0\np 1 5\n-\n"), Error);
    CHECK_THROWS_AS(load_sidecar(g, "q 0 7\np 1 5\n-\n"), Error);
    CHECK_THROWS_AS(load_sidecar(g, "g 0 7 9\np 1 5\n-\n"), Error);
  }
}

TEST_CASE("non-symmetric clause injection") {
  Formula f(4);
  f.add_clause({1, 2});
  append_nonsym(f, "c injected\n3 4 0 -1\n-2 0\n");
  REQUIRE(f.num_clauses() == 3);
  CHECK(f.clause(1) == Clause{3, 4});
  CHECK(f.clause(2) == Clause{-1, -2});
  CHECK(f.meta(0).symmetric);
  CHECK_FALSE(f.meta(1).symmetric);
  CHECK_FALSE(f.meta(2).symmetric);
  SUBCASE("unterminated run is an error") {
    CHECK_THROWS_AS(append_nonsym(f, "1 2\n"), Error);
  }
  SUBCASE("range still validated") {
    CHECK_THROWS_AS(append_nonsym(f, "9 0\n"), Error);
  }
}
