#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

namespace esat {

// Literals use the DIMACS convention: a nonzero signed integer whose
// magnitude is the (1-based) variable index and whose sign is the polarity.
using Var = int32_t;
using Lit = int32_t;

inline Var var_of(Lit l) { return l < 0 ? -l : l; }
inline Lit neg(Lit l) { return -l; }
inline bool positive(Lit l) { return l > 0; }

// Dense index for watch lists and other per-literal arrays: 2v-2 for v, 2v-1 for -v.
inline int lit_index(Lit l) { return 2 * (var_of(l) - 1) + (l < 0 ? 1 : 0); }

// A clause is a duplicate-free, non-tautological sequence of literals.
using Clause = std::vector<Lit>;

// Gliding bounds: how far a clause may shift uniformly toward zero (z) or
// away from zero (nb) while every image of its derivation stays inside the
// formula's clause family.
struct GlideBounds {
  int toward_zero = 0;
  int away = 0;
  bool operator==(const GlideBounds&) const = default;
};

// Multiplicative-scaling core data: the gcd of the underlying original
// clauses' literal magnitudes and the largest variable among them.
struct ScaleCore {
  int64_t gcd = 0;
  int64_t maxvar = 0;
  bool operator==(const ScaleCore&) const = default;
};

// Per-clause derivation metadata. `symmetric` is absorbingly false: a clause
// derived from any non-symmetric premise is itself non-symmetric and never
// seeds extra-clause generation. `e_lineage` marks clauses that are extra
// clauses themselves or were learned from at least one extra-clause premise.
struct ClauseMeta {
  bool symmetric = true;
  bool e_lineage = false;
  std::optional<GlideBounds> glide;
  std::optional<ScaleCore> scale;
  bool operator==(const ClauseMeta&) const = default;
};

}  // namespace esat
