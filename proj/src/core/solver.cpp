#include "core/solver.hpp"

#include <algorithm>
#include <cassert>

#include "core/error.hpp"

namespace esat {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Sat: return "SAT";
    case Outcome::Unsat: return "UNSAT";
    case Outcome::Timeout: return "TIMEOUT";
  }
  return "?";
}

Solver::Solver(const Formula& f, SolverConfig cfg)
    : formula_(f), cfg_(std::move(cfg)), nvars_(f.num_vars()), order_(var_act_) {
  values_.assign(nvars_ + 1, 0);
  levels_.assign(nvars_ + 1, 0);
  reasons_.assign(nvars_ + 1, kNoReason);
  var_act_.assign(nvars_ + 1, 0.0);
  polarity_.assign(nvars_ + 1, 0);
  seen_.assign(nvars_ + 1, 0);
  l0_has_.assign(nvars_ + 1, 0);
  l0_meta_.assign(nvars_ + 1, ClauseMeta{});
  l0_hist_tainted_.assign(nvars_ + 1, 0);
  stamp_.assign(nvars_ + 2, 0);
  bin_stamp_.assign(nvars_ + 1, 0);
  watches_.assign(2 * static_cast<size_t>(nvars_), {});
  order_.grow(nvars_);
  trail_.reserve(nvars_);

  if (cfg_.seed != 0) {
    // Deterministic phase scramble: a tiny xorshift stream keyed by the seed.
    uint64_t s = cfg_.seed;
    for (Var v = 1; v <= nvars_; ++v) {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      polarity_[v] = s & 1;
    }
  }
  for (Var v = nvars_; v >= 1; --v) order_.insert(v);

  switch (cfg_.plugin) {
    case Plugin::None: break;
    case Plugin::Gliding: sources_.push_back(std::make_unique<GlidingSource>()); break;
    case Plugin::Pythagorean: sources_.push_back(std::make_unique<ScalingSource>(nvars_)); break;
  }
  if (cfg_.dyn_sym) {
    for (const Permutation& p : cfg_.generators)
      for (const auto& [from, to] : p.mappings())
        if (var_of(from) > nvars_ || var_of(to) > nvars_)
          throw Error("generator permutation mentions a variable beyond the formula");
    sources_.push_back(std::make_unique<DynSymSource>(cfg_.generators));
  }

  attach_input();
}

Solver::~Solver() = default;

void Solver::attach_input() {
  for (size_t i = 0; i < formula_.num_clauses(); ++i) {
    const Clause& c = formula_.clause(i);
    const ClauseMeta& m = formula_.meta(i);
    if (c.empty()) {
      input_ok_ = false;
      return;
    }
    if (c.size() == 1) {
      int v = value(c[0]);
      if (v < 0) {
        input_ok_ = false;
        return;
      }
      if (v == 0) {
        enqueue(c[0], kNoReason);
        record_level0(var_of(c[0]), m, !m.symmetric);
      }
      continue;
    }
    CRef cr = alloc_clause(c, m, /*learnt=*/false, /*eclause=*/false);
    db_[cr].hist_tainted = !m.symmetric;
    attach_watches(cr);
    add_key(clause_key(c));
  }
}

Solver::CRef Solver::alloc_clause(const Clause& lits, const ClauseMeta& meta, bool learnt,
                                  bool eclause) {
  CRef cr;
  if (!free_.empty()) {
    cr = free_.back();
    free_.pop_back();
  } else {
    cr = static_cast<CRef>(db_.size());
    db_.emplace_back();
  }
  ClauseRec& rec = db_[cr];
  rec.lits = lits;
  rec.meta = meta;
  rec.activity = 0;
  rec.lbd = static_cast<int>(lits.size());
  rec.tier = Tier::Core;
  rec.learnt = learnt;
  rec.eclause = eclause;
  rec.dead = false;
  rec.hist_tainted = false;
  rec.touched = rep_.conflicts;
  return cr;
}

void Solver::attach_watches(CRef cr) {
  const ClauseRec& rec = db_[cr];
  watches_[lit_index(rec.lits[0])].push_back({cr, rec.lits[1]});
  watches_[lit_index(rec.lits[1])].push_back({cr, rec.lits[0]});
}

void Solver::detach_watches(CRef cr) {
  for (int w = 0; w < 2; ++w) {
    auto& list = watches_[lit_index(db_[cr].lits[w])];
    list.erase(std::remove_if(list.begin(), list.end(),
                              [cr](const Watcher& x) { return x.cref == cr; }),
               list.end());
  }
}

void Solver::remove_clause(CRef cr) {
  ClauseRec& rec = db_[cr];
  detach_watches(cr);
  drop_key(clause_key(rec.lits));
  if (rec.learnt || rec.eclause) {
    if (rec.meta.e_lineage)
      --rep_.eclauses_live;
    else
      --rep_.conflict_clauses_live;
  }
  rec.dead = true;
  rec.lits.clear();
  free_.push_back(cr);
}

bool Solver::locked(CRef cr) const {
  const ClauseRec& rec = db_[cr];
  return value(rec.lits[0]) > 0 && reasons_[var_of(rec.lits[0])] == cr;
}

int Solver::value(Lit l) const {
  int8_t v = values_[var_of(l)];
  return l < 0 ? -v : v;
}

void Solver::enqueue(Lit l, CRef reason) {
  Var v = var_of(l);
  assert(values_[v] == 0);
  values_[v] = l > 0 ? 1 : -1;
  levels_[v] = decision_level();
  reasons_[v] = reason;
  trail_.push_back(l);
  if (decision_level() == 0 && reason != kNoReason) {
    // Fold the whole top-level derivation of this fixed value so that later
    // conflict analyses consuming it account for every premise involved.
    const ClauseRec& c = db_[reason];
    MetaFold fold;
    fold.add(c.meta);
    bool ht = c.hist_tainted;
    for (Lit q : c.lits)
      if (var_of(q) != v) {
        fold.add(l0_meta_[var_of(q)]);
        ht |= l0_hist_tainted_[var_of(q)] != 0;
      }
    record_level0(v, fold.result(), ht);
  }
}

void Solver::record_level0(Var v, const ClauseMeta& m, bool hist_tainted) {
  if (l0_has_[v]) return;
  l0_has_[v] = 1;
  l0_meta_[v] = m;
  l0_hist_tainted_[v] = hist_tainted ? 1 : 0;
  if (!m.symmetric) ++rep_.tainted_level0;
}

Solver::CRef Solver::propagate() {
  CRef confl = kNoReason;
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    auto& ws = watches_[lit_index(neg(p))];
    size_t i = 0, j = 0;
    while (i < ws.size()) {
      Watcher w = ws[i];
      if (value(w.blocker) > 0) {
        ws[j++] = ws[i++];
        continue;
      }
      ClauseRec& c = db_[w.cref];
      ++i;
      Lit false_lit = neg(p);
      if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
      Lit first = c.lits[0];
      if (first != w.blocker && value(first) > 0) {
        ws[j++] = {w.cref, first};
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < c.lits.size(); ++k) {
        if (value(c.lits[k]) >= 0) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[lit_index(c.lits[1])].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.cref, first};
      if (value(first) < 0) {  // conflict
        confl = w.cref;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {  // unit
        enqueue(first, w.cref);
        ++rep_.propagations;
      }
    }
    ws.resize(j);
    if (confl != kNoReason) break;
  }
  return confl;
}

void Solver::backtrack(int level) {
  if (decision_level() <= level) return;
  for (size_t i = trail_.size(); i-- > static_cast<size_t>(trail_lim_[level]);) {
    Var v = var_of(trail_[i]);
    polarity_[v] = trail_[i] > 0;
    values_[v] = 0;
    reasons_[v] = kNoReason;
    order_.insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

void Solver::decide(Lit l) {
  if (l == 0 || var_of(l) > nvars_) throw Error("decide: bad literal");
  if (value(l) != 0) throw Error("decide: literal already assigned");
  trail_lim_.push_back(static_cast<int>(trail_.size()));
  enqueue(l, kNoReason);
}

bool Solver::propagate_to_fixpoint() { return propagate() == kNoReason; }

void Solver::test_enqueue_pending(Clause c, ClauseMeta m) {
  ++rep_.eclauses_generated;
  uint64_t key = clause_key(c);
  pending_keys_[key]++;
  pending_.push_back({std::move(c), std::move(m), false});
}

Lit Solver::pick_branch() {
  while (!order_.empty()) {
    Var v = order_.pop();
    if (values_[v] == 0) return polarity_[v] ? v : -v;
  }
  return 0;
}

void Solver::bump_var(Var v) {
  var_act_[v] += var_inc_;
  if (var_act_[v] > kActivityLimit) rescale_var_activity();
  order_.bumped(v);
}

void Solver::rescale_var_activity() {
  for (Var v = 1; v <= nvars_; ++v) var_act_[v] *= 1e-100;
  var_inc_ *= 1e-100;
}

void Solver::bump_clause(ClauseRec& c) {
  c.activity += cla_inc_;
  if (c.activity > kActivityLimit) rescale_clause_activity();
}

void Solver::rescale_clause_activity() {
  for (ClauseRec& r : db_)
    if (!r.dead) r.activity *= 1e-100;
  cla_inc_ *= 1e-100;
}

int Solver::compute_lbd(const Clause& c) {
  ++stamp_ctr_;
  int lbd = 0;
  for (Lit l : c) {
    int lev = levels_[var_of(l)];
    if (stamp_[lev] != stamp_ctr_) {
      stamp_[lev] = stamp_ctr_;
      ++lbd;
    }
  }
  return lbd;
}

Solver::Tier Solver::tier_for_lbd(int lbd) const {
  if (lbd <= kCoreLbdCut) return Tier::Core;
  if (lbd <= kMidLbdCut) return Tier::Mid;
  return Tier::Local;
}

void Solver::push_tier(CRef cr) {
  switch (db_[cr].tier) {
    case Tier::Core: break;  // never reduced, no list needed
    case Tier::Mid: mid_list_.push_back(cr); break;
    case Tier::Local: local_list_.push_back(cr); break;
  }
}

void Solver::on_clause_used(CRef cr) {
  ClauseRec& c = db_[cr];
  c.touched = rep_.conflicts;
  if (!(c.learnt || c.eclause)) return;
  int lbd = compute_lbd(c.lits);
  if (lbd < c.lbd) {
    c.lbd = lbd;
    Tier t = tier_for_lbd(lbd);
    if (t < c.tier) {  // only ever promote
      c.tier = t;
      push_tier(cr);
    }
  }
}

void Solver::analyze(CRef confl, Clause& out_learnt, int& out_btlevel, int& out_lbd,
                     ClauseMeta& out_meta, bool& out_hist_tainted) {
  MetaFold fold;
  bool ht = false;
  if (cfg_.debug_checks) {
    dbg_consulted_.clear();
    dbg_folded_.clear();
  }
  auto fold_clause = [&](CRef cr) {
    fold.add(db_[cr].meta);
    ht |= db_[cr].hist_tainted;
    if (cfg_.debug_checks) dbg_folded_.push_back(cr);
  };
  auto consume_l0 = [&](Var v) {
    fold.add(l0_meta_[v]);
    ht |= l0_hist_tainted_[v] != 0;
  };

  out_learnt.clear();
  out_learnt.push_back(0);  // slot for the asserting literal
  int pathC = 0;
  Lit p = 0;
  size_t index = trail_.size();
  CRef cur = confl;
  analyze_clear_.clear();

  do {
    ClauseRec& c = db_[cur];
    if (cfg_.debug_checks) dbg_consulted_.push_back(cur);
    fold_clause(cur);
    if (c.learnt || c.eclause) bump_clause(c);
    on_clause_used(cur);
    for (size_t j = (p == 0 ? 0 : 1); j < c.lits.size(); ++j) {
      Lit q = c.lits[j];
      Var v = var_of(q);
      if (seen_[v]) continue;
      if (levels_[v] > 0) {
        seen_[v] = 1;
        analyze_clear_.push_back(v);
        bump_var(v);
        if (levels_[v] >= decision_level())
          ++pathC;
        else
          out_learnt.push_back(q);
      } else {
        consume_l0(v);
      }
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    cur = reasons_[var_of(p)];
    seen_[var_of(p)] = 0;
    --pathC;
  } while (pathC > 0);
  out_learnt[0] = neg(p);

  // Recursive minimization: drop literals whose falsity is implied by the
  // rest of the clause; the reasons used by a successful proof join the fold.
  uint32_t abstract_levels = 0;
  for (size_t i = 1; i < out_learnt.size(); ++i)
    abstract_levels |= 1u << (levels_[var_of(out_learnt[i])] & 31);
  size_t keep = 1;
  for (size_t i = 1; i < out_learnt.size(); ++i) {
    Var v = var_of(out_learnt[i]);
    if (reasons_[v] == kNoReason || !lit_redundant(out_learnt[i], abstract_levels, fold, ht))
      out_learnt[keep++] = out_learnt[i];
  }
  out_learnt.resize(keep);

  if (cfg_.bin_res_minimize && out_learnt.size() > 1) bin_res_minimize_impl(out_learnt, fold, ht);

  for (Var v : analyze_clear_) seen_[v] = 0;

  if (out_learnt.size() == 1) {
    out_btlevel = 0;
  } else {
    size_t max_i = 1;
    for (size_t i = 2; i < out_learnt.size(); ++i)
      if (levels_[var_of(out_learnt[i])] > levels_[var_of(out_learnt[max_i])]) max_i = i;
    std::swap(out_learnt[1], out_learnt[max_i]);
    out_btlevel = levels_[var_of(out_learnt[1])];
  }
  out_lbd = compute_lbd(out_learnt);
  out_meta = fold.result();
  out_hist_tainted = ht;

  if (cfg_.debug_checks) {
    auto norm = [](std::vector<CRef>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    norm(dbg_consulted_);
    norm(dbg_folded_);
    if (dbg_consulted_ != dbg_folded_) ++rep_.debug_fold_gaps;
    if (out_meta.symmetric == ht) ++rep_.debug_taint_violations;
  }
}

bool Solver::lit_redundant(Lit l0, uint32_t abstract_levels, MetaFold& fold, bool& ht) {
  analyze_stack_.clear();
  analyze_stack_.push_back(l0);
  size_t top = analyze_clear_.size();
  std::vector<CRef> used;
  std::vector<Var> l0_used;
  while (!analyze_stack_.empty()) {
    Lit l = analyze_stack_.back();
    analyze_stack_.pop_back();
    CRef r = reasons_[var_of(l)];
    assert(r != kNoReason);
    used.push_back(r);
    const ClauseRec& c = db_[r];
    for (size_t i = 1; i < c.lits.size(); ++i) {
      Lit q = c.lits[i];
      Var v = var_of(q);
      if (seen_[v]) continue;
      if (levels_[v] == 0) {
        l0_used.push_back(v);
        continue;
      }
      if (reasons_[v] != kNoReason && ((1u << (levels_[v] & 31)) & abstract_levels) != 0) {
        seen_[v] = 1;
        analyze_stack_.push_back(q);
        analyze_clear_.push_back(v);
      } else {
        for (size_t k = top; k < analyze_clear_.size(); ++k) seen_[analyze_clear_[k]] = 0;
        analyze_clear_.resize(top);
        return false;
      }
    }
  }
  for (CRef cr : used) {
    fold.add(db_[cr].meta);
    ht |= db_[cr].hist_tainted;
    if (cfg_.debug_checks) {
      dbg_consulted_.push_back(cr);
      dbg_folded_.push_back(cr);
    }
  }
  for (Var v : l0_used) {
    fold.add(l0_meta_[v]);
    ht |= l0_hist_tainted_[v] != 0;
  }
  return true;
}

void Solver::bin_res_minimize_impl(Clause& out_learnt, MetaFold& fold, bool& ht) {
  // Self-subsuming resolution with binary clauses containing the asserting
  // literal: (p v rest v m) against binary (p v -m) drops m.
  ++stamp_ctr_;
  for (size_t i = 1; i < out_learnt.size(); ++i) bin_stamp_[var_of(out_learnt[i])] = stamp_ctr_;
  bool removed = false;
  for (const Watcher& w : watches_[lit_index(out_learnt[0])]) {
    const ClauseRec& c = db_[w.cref];
    if (c.lits.size() != 2) continue;
    Lit other = c.lits[0] == out_learnt[0] ? c.lits[1] : c.lits[0];
    if (bin_stamp_[var_of(other)] == stamp_ctr_ && value(other) > 0) {
      bin_stamp_[var_of(other)] = stamp_ctr_ - 1;
      removed = true;
      fold.add(c.meta);
      ht |= c.hist_tainted;
      if (cfg_.debug_checks) {
        dbg_consulted_.push_back(w.cref);
        dbg_folded_.push_back(w.cref);
      }
    }
  }
  if (removed) {
    size_t keep = 1;
    for (size_t i = 1; i < out_learnt.size(); ++i)
      if (bin_stamp_[var_of(out_learnt[i])] == stamp_ctr_) out_learnt[keep++] = out_learnt[i];
    out_learnt.resize(keep);
  }
}

void Solver::reduce_local() {
  ++rep_.reductions;
  std::sort(local_list_.begin(), local_list_.end());
  local_list_.erase(std::unique(local_list_.begin(), local_list_.end()), local_list_.end());
  std::vector<CRef> live;
  std::vector<DeletionCandidate> cands;
  for (CRef cr : local_list_) {
    const ClauseRec& c = db_[cr];
    if (c.dead || c.tier != Tier::Local) continue;
    live.push_back(cr);
    cands.push_back({c.activity, locked(cr), cr});
  }
  for (uint32_t id : select_for_deletion(std::move(cands), cfg_.deletion_ratio)) remove_clause(id);
  local_list_.clear();
  for (CRef cr : live)
    if (!db_[cr].dead) local_list_.push_back(cr);
}

void Solver::demote_mid_tier() {
  ++rep_.tier2_scans;
  std::vector<CRef> keep;
  for (CRef cr : mid_list_) {
    ClauseRec& c = db_[cr];
    if (c.dead || c.tier != Tier::Mid) continue;
    if (rep_.conflicts - c.touched >= cfg_.tier2_untouched) {
      c.tier = Tier::Local;
      local_list_.push_back(cr);
    } else {
      keep.push_back(cr);
    }
  }
  mid_list_ = std::move(keep);
}

uint64_t Solver::clause_key(const Clause& lits) const {
  Clause sorted = lits;
  std::sort(sorted.begin(), sorted.end());
  uint64_t h = 0xcbf29ce484222325ull;
  for (Lit l : sorted) {
    h ^= static_cast<uint64_t>(static_cast<int64_t>(l));
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

void Solver::add_key(uint64_t key) { ++keys_[key]; }

void Solver::drop_key(uint64_t key) {
  auto it = keys_.find(key);
  if (it != keys_.end() && --it->second == 0) keys_.erase(it);
}

bool Solver::key_present(uint64_t key) const { return keys_.count(key) != 0; }

bool Solver::passes_filters(const Clause& lits) {
  if (cfg_.no_filtering) return true;
  if (cfg_.size_cap > 0 && static_cast<int>(lits.size()) > cfg_.size_cap) return false;  // F3
  if (cfg_.examine_cap >= 0 && examined_ >= cfg_.examine_cap) return false;              // F5
  ++examined_;
  FilterParams p{cfg_.filter_x, cfg_.lbd_cap, 0};
  return filter_accepts(lits, p, values_, levels_);  // F1, F2
}

void Solver::offer_candidate(Emission e, bool hist_tainted) {
  ++rep_.eclauses_generated;
  if (cfg_.capture_queue) rep_.captured_queue.push_back(e);
  if (cfg_.debug_checks && hist_tainted) ++rep_.debug_taint_violations;
  if (e.lits.empty()) {
    ++rep_.eclauses_filtered;
    return;
  }
  for (Lit l : e.lits) {
    if (var_of(l) < 1 || var_of(l) > nvars_)
      throw Error("extra clause leaves the variable range; corrupt sidecar metadata?");
  }
  // Degenerate images (duplicate or complementary literals) are dropped.
  Clause sorted = e.lits;
  std::sort(sorted.begin(), sorted.end(),
            [](Lit a, Lit b) { return var_of(a) != var_of(b) ? var_of(a) < var_of(b) : a < b; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (var_of(sorted[i]) == var_of(sorted[i - 1])) {
      ++rep_.eclauses_filtered;
      return;
    }
  }
  if (cfg_.max_eclauses >= 0 &&
      rep_.eclauses_added + static_cast<int64_t>(pending_.size()) >= cfg_.max_eclauses) {  // F4
    ++rep_.eclauses_filtered;
    return;
  }
  if (!passes_filters(e.lits)) {
    ++rep_.eclauses_filtered;
    return;
  }
  uint64_t key = clause_key(e.lits);
  if (key_present(key) || pending_keys_.count(key) != 0) {
    ++rep_.eclauses_filtered;
    return;
  }
  ++pending_keys_[key];
  pending_.push_back({std::move(e.lits), std::move(e.meta), hist_tainted});
}

void Solver::generate_eclauses(const Clause& learned, const ClauseMeta& meta, bool hist_tainted) {
  if (sources_.empty() || !meta.symmetric) return;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& src : sources_)
    src->emit(learned, meta, [&](Emission e) { offer_candidate(std::move(e), hist_tainted); });
  overhead_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool Solver::install_pending() {
  if (pending_.empty()) return true;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (Pending& p : pending_) {
    if (!ok) {
      ++rep_.eclauses_filtered;
      continue;
    }
    uint64_t key = clause_key(p.lits);
    if (cfg_.max_eclauses >= 0 && rep_.eclauses_added >= cfg_.max_eclauses) {  // F4
      ++rep_.eclauses_filtered;
      continue;
    }
    if (key_present(key)) {  // learned meanwhile
      ++rep_.eclauses_filtered;
      continue;
    }
    // Re-check against the top-level assignment; clauses already satisfied
    // there are permanently useless.
    int nonfalse = 0;
    Lit unit = 0;
    bool satisfied = false;
    for (Lit l : p.lits) {
      int v = value(l);
      if (v > 0) {
        satisfied = true;
        break;
      }
      if (v == 0) {
        ++nonfalse;
        unit = l;
      }
    }
    if (satisfied) {
      ++rep_.eclauses_filtered;
      continue;
    }
    if (!passes_filters(p.lits)) {
      ++rep_.eclauses_filtered;
      continue;
    }
    if (nonfalse == 0) {
      // Every literal is false at the top level: the implied clause is
      // violated, so the formula itself is unsatisfiable.
      ++rep_.eclauses_added;
      ++rep_.eclauses_family;
      ok = false;
      continue;
    }
    if (p.lits.size() == 1 || nonfalse == 1) {
      if (p.lits.size() > 1) {
        // Store it watchable: the one open literal first, any false second.
        auto it = std::find(p.lits.begin(), p.lits.end(), unit);
        std::iter_swap(p.lits.begin(), it);
        CRef cr = alloc_clause(p.lits, p.meta, /*learnt=*/true, /*eclause=*/true);
        ClauseRec& rec = db_[cr];
        rec.hist_tainted = p.hist_tainted;
        rec.activity = cfg_.eclause_activity * cla_inc_;
        rec.tier = Tier::Local;
        push_tier(cr);
        attach_watches(cr);
        add_key(key);
        ++rep_.eclauses_live;
        enqueue(unit, cr);
      } else {
        enqueue(unit, kNoReason);
        record_level0(var_of(unit), p.meta, p.hist_tainted);
      }
      ++rep_.eclauses_added;
      ++rep_.eclauses_family;
      continue;
    }
    CRef cr = alloc_clause(p.lits, p.meta, /*learnt=*/true, /*eclause=*/true);
    ClauseRec& rec = db_[cr];
    rec.hist_tainted = p.hist_tainted;
    rec.activity = cfg_.eclause_activity * cla_inc_;
    rec.tier = Tier::Local;
    push_tier(cr);
    attach_watches(cr);
    add_key(key);
    ++rep_.eclauses_added;
    ++rep_.eclauses_family;
    ++rep_.eclauses_live;
  }
  pending_.clear();
  pending_keys_.clear();
  overhead_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return ok;
}

double Solver::seconds_since_start() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

SolveReport Solver::solve() {
  start_ = std::chrono::steady_clock::now();
  if (done_) throw Error("solve: already run");
  done_ = true;

  if (!input_ok_) {
    rep_.outcome = Outcome::Unsat;
    rep_.total_time = seconds_since_start();
    rep_.eclause_overhead_time = overhead_seconds_;
    return rep_;
  }

  int64_t run_conflicts = 0;
  int64_t budget = restart_schedule(1, cfg_.restart_base);
  int64_t last_local = 0, last_mid = 0;
  Clause learnt;

  while (true) {
    CRef confl = propagate();
    if (confl != kNoReason) {
      ++rep_.conflicts;
      if (decision_level() == 0) {
        rep_.ended_at_conflict = true;
        rep_.outcome = Outcome::Unsat;
        break;
      }
      int btlevel = 0, lbd = 0;
      ClauseMeta meta;
      bool htaint = false;
      analyze(confl, learnt, btlevel, lbd, meta, htaint);
      backtrack(btlevel);
      if (cfg_.capture_learned) rep_.captured_learned.push_back(learnt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
        record_level0(var_of(learnt[0]), meta, htaint);
      } else {
        CRef cr = alloc_clause(learnt, meta, /*learnt=*/true, /*eclause=*/false);
        ClauseRec& rec = db_[cr];
        rec.hist_tainted = htaint;
        rec.lbd = lbd;
        rec.tier = tier_for_lbd(lbd);
        push_tier(cr);
        bump_clause(rec);
        attach_watches(cr);
        add_key(clause_key(learnt));
        if (rec.meta.e_lineage) {
          ++rep_.eclauses_family;
          ++rep_.eclauses_live;
        } else {
          ++rep_.conflict_clauses_live;
        }
        enqueue(learnt[0], cr);
      }
      generate_eclauses(learnt, meta, htaint);
      decay_var_activity();
      decay_clause_activity();

      if (cfg_.max_conflicts >= 0 && rep_.conflicts >= cfg_.max_conflicts) {
        rep_.ended_at_conflict = true;
        rep_.outcome = Outcome::Timeout;
        break;
      }
      if (cfg_.timeout_seconds > 0 && rep_.conflicts % 128 == 0 &&
          seconds_since_start() > cfg_.timeout_seconds) {
        rep_.ended_at_conflict = true;
        rep_.outcome = Outcome::Timeout;
        break;
      }
      ++run_conflicts;
      if (run_conflicts >= budget) {
        backtrack(0);
        ++rep_.restarts;
        if (!install_pending()) {
          rep_.outcome = Outcome::Unsat;
          break;
        }
        run_conflicts = 0;
        budget = restart_schedule(rep_.restarts + 1, cfg_.restart_base);
      }
      if (rep_.conflicts - last_mid >= cfg_.tier2_interval) {
        last_mid = rep_.conflicts;
        demote_mid_tier();
      }
      if (rep_.conflicts - last_local >= cfg_.local_reduce_interval) {
        last_local = rep_.conflicts;
        reduce_local();
      }
    } else {
      if (static_cast<int>(trail_.size()) == nvars_) {
        rep_.model.clear();
        Assignment a(nvars_);
        for (Var v = 1; v <= nvars_; ++v) {
          Lit l = values_[v] > 0 ? v : -v;
          rep_.model.push_back(l);
          a.assign(l);
        }
        if (eval(formula_, a) != Eval::Satisfied)
          throw Error("internal: model fails to satisfy the input formula");
        rep_.outcome = Outcome::Sat;
        break;
      }
      Lit next = pick_branch();
      ++rep_.decisions;
      decide(next);
    }
  }

  rep_.total_time = seconds_since_start();
  rep_.eclause_overhead_time = overhead_seconds_;
  return rep_;
}

}  // namespace esat
