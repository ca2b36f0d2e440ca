#include "core/sources.hpp"

#include <algorithm>
#include <cassert>

#include "core/error.hpp"

namespace esat {

Clause glide_clause(const Clause& c, int k) {
  Clause out;
  out.reserve(c.size());
  for (Lit l : c) {
    int64_t mag = var_of(l) + static_cast<int64_t>(k);
    if (mag < 1) throw Error("glide_clause: shift drives a variable below 1");
    out.push_back(l > 0 ? static_cast<Lit>(mag) : -static_cast<Lit>(mag));
  }
  return out;
}

std::vector<Emission> emit_gliding(const Clause& c, const ClauseMeta& m) {
  std::vector<Emission> out;
  GlidingSource src;
  src.emit(c, m, [&](Emission e) { out.push_back(std::move(e)); });
  return out;
}

std::vector<Emission> emit_pythagorean(const Clause& c, const ClauseMeta& m, int n) {
  std::vector<Emission> out;
  ScalingSource src(n);
  src.emit(c, m, [&](Emission e) { out.push_back(std::move(e)); });
  return out;
}

void GlidingSource::emit(const Clause& c, const ClauseMeta& m,
                         const std::function<void(Emission)>& sink) const {
  if (!m.symmetric || !m.glide) return;
  const auto [z, nb] = *m.glide;
  for (int s = 1; s <= z; ++s) {
    Emission e;
    e.lits = glide_clause(c, -s);
    e.meta.e_lineage = true;
    e.meta.glide = GlideBounds{z - s, nb + s};
    sink(std::move(e));
  }
  for (int s = 1; s <= nb; ++s) {
    Emission e;
    e.lits = glide_clause(c, +s);
    e.meta.e_lineage = true;
    e.meta.glide = GlideBounds{z + s, nb - s};
    sink(std::move(e));
  }
}

void ScalingSource::emit(const Clause& c, const ClauseMeta& m,
                         const std::function<void(Emission)>& sink) const {
  if (!m.symmetric || !m.scale) return;
  const auto [g, mx] = *m.scale;
  if (g <= 0 || mx <= 0) return;
  // The gcd of the underlying original clauses divides every literal of any
  // clause derived from them, and their largest variable.
  for (Lit l : c)
    if (var_of(l) % g != 0) throw Error("emit_pythagorean: gcd does not divide a literal");
  if (mx % g != 0) throw Error("emit_pythagorean: gcd does not divide maxvar");
  int64_t limit = static_cast<int64_t>(n_) * g / mx;
  for (int64_t i = 1; i <= limit; ++i) {
    if (i == g) continue;
    Emission e;
    e.lits.reserve(c.size());
    for (Lit l : c) {
      int64_t mag = var_of(l) * i / g;
      e.lits.push_back(l > 0 ? static_cast<Lit>(mag) : -static_cast<Lit>(mag));
    }
    e.meta.e_lineage = true;
    e.meta.scale = ScaleCore{i, mx * i / g};
    sink(std::move(e));
  }
}

void DynSymSource::emit(const Clause& c, const ClauseMeta& m,
                        const std::function<void(Emission)>& sink) const {
  if (!m.symmetric) return;
  for (const Permutation& p : gens_) {
    Emission e;
    e.lits = p.apply(c);
    e.meta.e_lineage = true;
    sink(std::move(e));
  }
}

bool filter_accepts(std::span<const Lit> lits, const FilterParams& p,
                    std::span<const int8_t> values_by_var, std::span<const int> levels_by_var) {
  if (p.size_cap > 0 && static_cast<int>(lits.size()) > p.size_cap) return false;
  if (p.max_nonfalse >= 0) {
    int nonfalse = 0;
    for (Lit l : lits) {
      int v = values_by_var[var_of(l)];
      if (l < 0) v = -v;
      if (v >= 0 && ++nonfalse > p.max_nonfalse) return false;
    }
  }
  if (p.lbd_cap > 0) {
    std::vector<int> levels;
    for (Lit l : lits) {
      Var v = var_of(l);
      if (values_by_var[v] != 0) levels.push_back(levels_by_var[v]);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (static_cast<int>(levels.size()) > p.lbd_cap) return false;
  }
  return true;
}

}  // namespace esat
