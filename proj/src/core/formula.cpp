#include "core/formula.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace esat {

void Assignment::assign(Lit l) {
  int8_t& slot = val_[var_of(l)];
  if (slot != 0) throw Error("assign: variable " + std::to_string(var_of(l)) + " already set");
  slot = l > 0 ? 1 : -1;
}

void Assignment::unassign(Var v) { val_[v] = 0; }

bool Assignment::total() const {
  for (size_t v = 1; v < val_.size(); ++v)
    if (val_[v] == 0) return false;
  return true;
}

void Formula::set_num_vars(int n) {
  if (n < num_vars_) throw Error("set_num_vars: cannot shrink below existing variables");
  num_vars_ = n;
}

void Formula::add_clause(Clause c, ClauseMeta m) {
  Clause out;
  out.reserve(c.size());
  for (Lit l : c) {
    if (l == 0) throw Error("add_clause: literal 0");
    if (var_of(l) > num_vars_)
      throw Error("add_clause: variable " + std::to_string(var_of(l)) + " exceeds declared " +
                  std::to_string(num_vars_));
    if (std::find(out.begin(), out.end(), neg(l)) != out.end())
      throw Error("add_clause: tautological clause");
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  clauses_.push_back(std::move(out));
  meta_.push_back(std::move(m));
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  Formula f;
  bool have_header = false;
  long declared_clauses = 0;
  std::string tok;
  Clause cur;
  while (in >> tok) {
    if (tok == "c") {  // comment: skip the rest of the line
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (!tok.empty() && tok[0] == 'c' && !have_header) {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      if (have_header) throw Error("parse_dimacs: duplicate header");
      std::string fmt;
      long nv = -1, nc = -1;
      if (!(in >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
        throw Error("parse_dimacs: malformed 'p cnf' header");
      f.set_num_vars(static_cast<int>(nv));
      declared_clauses = nc;
      have_header = true;
      continue;
    }
    long v = 0;
    try {
      size_t pos = 0;
      v = std::stol(tok, &pos);
      if (pos != tok.size()) throw Error("parse_dimacs: bad token '" + tok + "'");
    } catch (const std::exception&) {
      throw Error("parse_dimacs: bad token '" + tok + "'");
    }
    if (!have_header) throw Error("parse_dimacs: clause data before header");
    if (v == 0) {
      f.add_clause(cur);
      cur.clear();
    } else {
      cur.push_back(static_cast<Lit>(v));
    }
  }
  if (!have_header) throw Error("parse_dimacs: missing 'p cnf' header");
  if (!cur.empty()) throw Error("parse_dimacs: unterminated clause");
  if (static_cast<long>(f.num_clauses()) != declared_clauses)
    throw Error("parse_dimacs: header declares " + std::to_string(declared_clauses) +
                " clauses, found " + std::to_string(f.num_clauses()));
  return f;
}

Formula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

std::string write_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Lit l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

void write_dimacs_file(const Formula& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << write_dimacs(f);
  if (!out) throw Error("write failed for '" + path + "'");
}

Clause resolve(const Clause& c1, const Clause& c2, Var pivot) {
  if (pivot <= 0) throw Error("resolve: pivot must be a positive variable index");
  bool pos_in_1 = std::find(c1.begin(), c1.end(), pivot) != c1.end();
  bool neg_in_1 = std::find(c1.begin(), c1.end(), -pivot) != c1.end();
  bool pos_in_2 = std::find(c2.begin(), c2.end(), pivot) != c2.end();
  bool neg_in_2 = std::find(c2.begin(), c2.end(), -pivot) != c2.end();
  if (!((pos_in_1 && neg_in_2) || (neg_in_1 && pos_in_2)))
    throw Error("resolve: pivot must occur with opposite signs in the two clauses");
  Clause out;
  auto push = [&](Lit l) {
    if (var_of(l) == pivot) return;
    if (std::find(out.begin(), out.end(), neg(l)) != out.end())
      throw Error("resolve: tautological resolvent");
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  };
  for (Lit l : c1) push(l);
  for (Lit l : c2) push(l);
  return out;
}

Eval eval(const Clause& c, const Assignment& a) {
  bool all_false = true;
  for (Lit l : c) {
    int v = a.value(l);
    if (v > 0) return Eval::Satisfied;
    if (v == 0) all_false = false;
  }
  return all_false ? Eval::Falsified : Eval::Undetermined;
}

Eval eval(const Formula& f, const Assignment& a) {
  bool all_sat = true;
  for (const Clause& c : f.clauses()) {
    Eval e = eval(c, a);
    if (e == Eval::Falsified) return Eval::Falsified;
    if (e != Eval::Satisfied) all_sat = false;
  }
  return all_sat ? Eval::Satisfied : Eval::Undetermined;
}

}  // namespace esat
