#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "core/types.hpp"

namespace esat {

// Ternary truth value of a literal/clause/formula under a partial assignment.
enum class Eval { Satisfied, Falsified, Undetermined };

// Partial assignment over variables 1..num_vars, each true/false/unassigned.
class Assignment {
 public:
  explicit Assignment(int num_vars) : val_(static_cast<size_t>(num_vars) + 1, 0) {}

  int num_vars() const { return static_cast<int>(val_.size()) - 1; }

  void assign(Lit l);       // make l true (its variable may not be set yet)
  void unassign(Var v);
  bool has(Var v) const { return val_[v] != 0; }
  bool total() const;

  // +1 if l is true, -1 if false, 0 if its variable is unassigned.
  int value(Lit l) const {
    int8_t v = val_[var_of(l)];
    return l < 0 ? -v : v;
  }

 private:
  std::vector<int8_t> val_;
};

// A CNF formula: a clause list over variables 1..num_vars plus one metadata
// record per clause (same order).
class Formula {
 public:
  Formula() = default;
  explicit Formula(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(size_t i) const { return clauses_[i]; }
  const ClauseMeta& meta(size_t i) const { return meta_[i]; }
  ClauseMeta& meta(size_t i) { return meta_[i]; }

  void set_num_vars(int n);

  // Validates variable range, merges duplicate literals, rejects tautologies.
  void add_clause(Clause c, ClauseMeta m = {});

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<ClauseMeta> meta_;
};

// DIMACS CNF reader/writer. parse_dimacs rejects tautological clauses,
// merges duplicate literals, and requires every |literal| <= num_vars and a
// clause count that matches the header.
Formula parse_dimacs(std::string_view text);
Formula read_dimacs_file(const std::string& path);
std::string write_dimacs(const Formula& f);
void write_dimacs_file(const Formula& f, const std::string& path);

// Binary resolution of c1 and c2 on pivot variable v: v must occur with
// opposite signs in the two clauses, and the resolvent must not be a
// tautology; duplicate literals are merged.
Clause resolve(const Clause& c1, const Clause& c2, Var pivot);

Eval eval(const Clause& c, const Assignment& a);
Eval eval(const Formula& f, const Assignment& a);

}  // namespace esat
