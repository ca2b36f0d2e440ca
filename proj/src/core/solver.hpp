#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/formula.hpp"
#include "core/heap.hpp"
#include "core/meta_fold.hpp"
#include "core/permutation.hpp"
#include "core/schedule.hpp"
#include "core/sources.hpp"

namespace esat {

// At most one metadata plugin drives emission and the combine rule; the
// dynamic-symmetry source can be layered on top of any of them.
enum class Plugin { None, Gliding, Pythagorean };

struct SolverConfig {
  Plugin plugin = Plugin::None;
  bool dyn_sym = false;
  std::vector<Permutation> generators;  // required when dyn_sym is set

  // Filters on candidate extra clauses (see FilterParams); caps <= 0 are off.
  int filter_x = 3;
  int lbd_cap = 0;
  int size_cap = 20;
  int64_t max_eclauses = -1;  // total cap on installed extra clauses
  int64_t examine_cap = -1;   // cap on assignment-dependent filter evaluations
  bool no_filtering = false;  // disable every filter above

  double eclause_activity = 0.8;  // initial activity relative to the clause bump
  double deletion_ratio = 0.8;    // fraction of local-tier clauses deleted per reduction

  int restart_base = 100;  // Luby unit, in conflicts
  double var_decay = 0.95;
  int64_t local_reduce_interval = 15000;  // conflicts between local-tier reductions
  int64_t tier2_interval = 10000;         // conflicts between mid-tier demotion scans
  int64_t tier2_untouched = 30000;        // demote mid-tier clauses idle this long

  uint64_t seed = 0;           // perturbs initial saved phases when nonzero
  double timeout_seconds = 0;  // 0 = unlimited; checked at conflicts
  int64_t max_conflicts = -1;  // -1 = unlimited

  bool bin_res_minimize = false;  // binary-resolution strengthening of learned clauses

  // Diagnostics (used by tests): record every queued extra clause / learned
  // clause; run the independent taint tracker and fold-completeness checks.
  bool capture_queue = false;
  bool capture_learned = false;
  bool debug_checks = false;
};

enum class Outcome { Sat, Unsat, Timeout };
const char* to_string(Outcome o);

struct SolveReport {
  Outcome outcome = Outcome::Timeout;
  std::vector<Lit> model;  // one literal per variable when Sat

  int64_t conflicts = 0;
  int64_t decisions = 0;
  int64_t propagations = 0;
  int64_t restarts = 0;
  int64_t reductions = 0;    // local-tier reduction passes
  int64_t tier2_scans = 0;   // mid-tier demotion scans

  int64_t eclauses_generated = 0;  // candidates produced by the sources
  int64_t eclauses_filtered = 0;   // candidates rejected (filters, duplicates, caps)
  int64_t eclauses_added = 0;      // extra clauses installed into the database
  int64_t eclauses_live = 0;       // undeleted extra-lineage clauses still in the database
  int64_t eclauses_family = 0;     // installed extra clauses + stored clauses learned from one
  int64_t conflict_clauses_live = 0;  // undeleted stored learned clauses outside that family
  int64_t tainted_level0 = 0;         // variables fixed at level 0 by non-symmetric reasoning

  double eclause_overhead_time = 0;  // seconds spent emitting/filtering/installing
  double total_time = 0;

  // True when the run ended inside conflict handling (so the final conflict
  // never reached the restart/reduction checks). Lets the scheduling oracle
  // replay restarts/reductions from the conflict count alone.
  bool ended_at_conflict = false;

  int64_t debug_taint_violations = 0;  // populated only under debug_checks
  int64_t debug_fold_gaps = 0;         // analyses where a consulted clause went unfolded

  std::vector<Emission> captured_queue;    // with capture_queue
  std::vector<Clause> captured_learned;    // with capture_learned
};

// Conflict-driven clause-learning solver with two-watched-literal
// propagation, first-UIP learning with recursive minimization, Luby
// restarts, phase saving, a three-tier learned-clause database, and
// derivation-metadata tracking that feeds the extra-clause sources.
class Solver {
 public:
  Solver(const Formula& f, SolverConfig cfg);
  ~Solver();

  SolveReport solve();

  // --- scripted stepping, used by tests and the verification oracles ---
  // value of a literal: +1 true, -1 false, 0 unassigned
  int value(Lit l) const;
  void decide(Lit l);              // open a new decision level and assign l
  bool propagate_to_fixpoint();    // false iff a conflict was found
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  // enqueue a pending extra clause as if a source had emitted it
  void test_enqueue_pending(Clause c, ClauseMeta m);

 private:
  using CRef = uint32_t;
  static constexpr CRef kNoReason = 0xffffffffu;
  enum class Tier : uint8_t { Core, Mid, Local };

  struct ClauseRec {
    std::vector<Lit> lits;
    ClauseMeta meta;
    double activity = 0;
    int lbd = 0;
    Tier tier = Tier::Core;
    bool learnt = false;
    bool eclause = false;
    bool dead = false;
    bool hist_tainted = false;  // independent taint tracker (debug_checks)
    int64_t touched = 0;
  };

  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  struct Pending {
    Clause lits;
    ClauseMeta meta;
    bool hist_tainted = false;
  };

  // setup
  void attach_input();
  CRef alloc_clause(const Clause& lits, const ClauseMeta& meta, bool learnt, bool eclause);
  void attach_watches(CRef cr);
  void detach_watches(CRef cr);
  void remove_clause(CRef cr);
  bool locked(CRef cr) const;

  // assignment & propagation
  void enqueue(Lit l, CRef reason);
  CRef propagate();
  void backtrack(int level);

  // decisions
  Lit pick_branch();
  void bump_var(Var v);
  void decay_var_activity() { var_inc_ /= cfg_.var_decay; }
  void bump_clause(ClauseRec& c);
  void decay_clause_activity() { cla_inc_ /= kClauseDecay; }
  void rescale_var_activity();
  void rescale_clause_activity();

  // learning
  void analyze(CRef confl, Clause& out_learnt, int& out_btlevel, int& out_lbd, ClauseMeta& out_meta,
               bool& out_hist_tainted);
  bool lit_redundant(Lit l, uint32_t abstract_levels, MetaFold& fold, bool& ht);
  void bin_res_minimize_impl(Clause& out_learnt, MetaFold& fold, bool& ht);
  int compute_lbd(const Clause& c);
  void on_clause_used(CRef cr);
  void record_level0(Var v, const ClauseMeta& m, bool hist_tainted);

  // clause database
  Tier tier_for_lbd(int lbd) const;
  void push_tier(CRef cr);
  void reduce_local();
  void demote_mid_tier();

  // extra clauses
  void generate_eclauses(const Clause& learned, const ClauseMeta& meta, bool hist_tainted);
  void offer_candidate(Emission e, bool hist_tainted);
  bool passes_filters(const Clause& lits);
  bool install_pending();  // false iff a top-level conflict was found
  uint64_t clause_key(const Clause& lits) const;
  void add_key(uint64_t key);
  void drop_key(uint64_t key);
  bool key_present(uint64_t key) const;

  // bookkeeping
  double seconds_since_start() const;

  static constexpr double kClauseDecay = 0.999;
  static constexpr double kActivityLimit = 1e100;
  static constexpr int kCoreLbdCut = 3;
  static constexpr int kMidLbdCut = 6;

  const Formula& formula_;
  SolverConfig cfg_;
  int nvars_ = 0;
  bool input_ok_ = true;  // false if the input already contains a top-level conflict

  std::vector<ClauseRec> db_;
  std::vector<CRef> free_;
  std::vector<std::vector<Watcher>> watches_;  // indexed by lit_index
  std::unordered_map<uint64_t, int> keys_;     // exact-duplicate suppression

  std::vector<int8_t> values_;  // by var: +1/-1/0
  std::vector<int> levels_;     // by var
  std::vector<CRef> reasons_;   // by var
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;

  std::vector<double> var_act_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  VarHeap order_;
  std::vector<uint8_t> polarity_;  // saved phase, 1 = true

  std::vector<uint8_t> seen_;
  std::vector<Lit> analyze_stack_;
  std::vector<Var> analyze_clear_;
  std::vector<int64_t> stamp_;      // by decision level, for LBD computation
  std::vector<int64_t> bin_stamp_;  // by variable, for binary-resolution minimization
  int64_t stamp_ctr_ = 0;

  // level-0 derivation records: meta folded over the whole top-level
  // derivation of the variable's value, consumed when conflict analysis
  // drops a level-0 literal.
  std::vector<uint8_t> l0_has_;
  std::vector<ClauseMeta> l0_meta_;
  std::vector<uint8_t> l0_hist_tainted_;

  std::vector<CRef> mid_list_, local_list_;

  std::vector<Pending> pending_;
  std::unordered_map<uint64_t, int> pending_keys_;
  int64_t examined_ = 0;

  std::vector<std::unique_ptr<SymmetrySource>> sources_;

  SolveReport rep_;
  std::chrono::steady_clock::time_point start_;
  double overhead_seconds_ = 0;
  bool done_ = false;

  // debug_checks scratch: clauses consulted vs folded during one analyze
  std::vector<CRef> dbg_consulted_;
  std::vector<CRef> dbg_folded_;
};

}  // namespace esat
