#include "core/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/solver.hpp"
#include "core/sources.hpp"

namespace esat {

const char* to_string(Implied r) {
  switch (r) {
    case Implied::Yes: return "implied";
    case Implied::No: return "not-implied";
    case Implied::Unknown: return "unknown";
  }
  return "?";
}

bool check_model(const Formula& f, const std::vector<Lit>& model) {
  Assignment a(f.num_vars());
  for (Lit l : model) {
    if (l == 0 || var_of(l) > f.num_vars()) throw Error("check_model: literal out of range");
    if (a.has(var_of(l))) {
      if (a.value(l) < 0) throw Error("check_model: contradictory literals");
      continue;
    }
    a.assign(l);
  }
  if (!a.total()) throw Error("check_model: assignment is partial");
  return eval(f, a) == Eval::Satisfied;
}

Implied check_implied(const Formula& f, const Clause& c, int64_t max_conflicts) {
  Formula g(f.num_vars());
  for (size_t i = 0; i < f.num_clauses(); ++i) g.add_clause(f.clause(i));
  for (Lit l : c) {
    if (l == 0 || var_of(l) > f.num_vars()) throw Error("check_implied: literal out of range");
    g.add_clause({neg(l)});
  }
  SolverConfig cfg;
  cfg.plugin = Plugin::None;
  cfg.max_conflicts = max_conflicts;
  Solver s(g, cfg);
  switch (s.solve().outcome) {
    case Outcome::Unsat: return Implied::Yes;
    case Outcome::Sat: return Implied::No;
    case Outcome::Timeout: return Implied::Unknown;
  }
  return Implied::Unknown;
}

bool brute_force_sat(const Formula& f, std::vector<Lit>* model) {
  int n = f.num_vars();
  if (n > 24) throw Error("brute_force_sat: more than 24 variables");
  // Bit i-1 of the mask holds variable i. A clause is satisfied when a
  // positive literal's bit is set or a negative literal's bit is clear.
  std::vector<uint32_t> pos(f.num_clauses(), 0), neg_mask(f.num_clauses(), 0);
  for (size_t i = 0; i < f.num_clauses(); ++i) {
    for (Lit l : f.clause(i)) {
      uint32_t bit = 1u << (var_of(l) - 1);
      if (l > 0)
        pos[i] |= bit;
      else
        neg_mask[i] |= bit;
    }
  }
  uint64_t total = uint64_t{1} << n;
  for (uint64_t m = 0; m < total; ++m) {
    bool ok = true;
    for (size_t i = 0; i < f.num_clauses(); ++i) {
      if ((pos[i] & m) == 0 && (neg_mask[i] & ~m) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (model) {
        model->clear();
        for (int v = 1; v <= n; ++v) model->push_back((m >> (v - 1)) & 1 ? v : -v);
      }
      return true;
    }
  }
  return false;
}

std::vector<GlideViolation> glide_membership_oracle(const Formula& f) {
  std::set<std::vector<Lit>> members;
  for (const Clause& c : f.clauses()) {
    std::vector<Lit> s = c;
    std::sort(s.begin(), s.end());
    members.insert(std::move(s));
  }
  auto present = [&](const Clause& c, int shift) {
    for (Lit l : c)
      if (var_of(l) + shift < 1 || var_of(l) + shift > f.num_vars()) return false;
    std::vector<Lit> s = glide_clause(c, shift);
    std::sort(s.begin(), s.end());
    return members.count(s) != 0;
  };
  std::vector<GlideViolation> out;
  bool any_bounds = false;
  for (size_t i = 0; i < f.num_clauses(); ++i) {
    const ClauseMeta& m = f.meta(i);
    if (!m.glide) continue;
    any_bounds = true;
    const Clause& c = f.clause(i);
    const auto [z, nb] = *m.glide;
    for (int s = 1; s <= z; ++s)
      if (!present(c, -s)) out.push_back({i, -s, true});
    for (int s = 1; s <= nb; ++s)
      if (!present(c, +s)) out.push_back({i, +s, true});
    if (present(c, -(z + 1))) out.push_back({i, -(z + 1), false});
    if (present(c, +(nb + 1))) out.push_back({i, +(nb + 1), false});
  }
  if (!any_bounds && f.num_clauses() > 0)
    throw Error("glide_membership_oracle: no clause carries gliding bounds");
  return out;
}

std::string describe(const Formula& f, const GlideViolation& v) {
  std::ostringstream os;
  os << "clause " << v.clause + 1 << " (";
  for (size_t i = 0; i < f.clause(v.clause).size(); ++i)
    os << (i ? " " : "") << f.clause(v.clause)[i];
  os << "): shift " << v.shift << (v.missing ? " leaves the formula" : " stays inside the formula")
     << " contrary to its bounds";
  return os.str();
}

}  // namespace esat
