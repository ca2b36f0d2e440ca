#pragma once

#include <algorithm>
#include <span>

#include "core/types.hpp"

namespace esat {

// Incremental fold of derivation metadata across every clause consulted
// while deriving a new clause (conflict analysis, clause minimization,
// top-level propagation). All components are semilattice operations, so
// folding a clause more than once is harmless:
//   symmetric : AND          glide : componentwise min
//   e_lineage : OR           scale : gcd of gcds, max of maxvars
// A premise lacking glide (resp. scale) data erases that component.
class MetaFold {
 public:
  void add(const ClauseMeta& m) {
    symmetric_ &= m.symmetric;
    e_lineage_ |= m.e_lineage;
    if (!m.glide) {
      has_glide_ = false;
    } else if (has_glide_) {
      glide_.toward_zero = std::min(glide_.toward_zero, m.glide->toward_zero);
      glide_.away = std::min(glide_.away, m.glide->away);
      seen_glide_ = true;
    }
    if (!m.scale) {
      has_scale_ = false;
    } else if (has_scale_) {
      scale_.gcd = gcd64(scale_.gcd, m.scale->gcd);
      scale_.maxvar = std::max(scale_.maxvar, m.scale->maxvar);
      seen_scale_ = true;
    }
  }

  // Metadata for the derived clause. Components survive only if every
  // consulted premise carried them (and at least one premise was consulted).
  ClauseMeta result() const {
    ClauseMeta m;
    m.symmetric = symmetric_;
    m.e_lineage = e_lineage_;
    if (has_glide_ && seen_glide_) m.glide = glide_;
    if (has_scale_ && seen_scale_) m.scale = scale_;
    return m;
  }

 private:
  static int64_t gcd64(int64_t a, int64_t b) {
    while (b != 0) {
      int64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  bool symmetric_ = true;
  bool e_lineage_ = false;
  bool has_glide_ = true, seen_glide_ = false;
  bool has_scale_ = true, seen_scale_ = false;
  GlideBounds glide_{1 << 30, 1 << 30};
  ScaleCore scale_{0, 0};
};

// Componentwise-minimum fold of the antecedents' gliding bounds; empty if
// any antecedent lacks them.
std::optional<GlideBounds> combine_glide(std::span<const ClauseMeta> antecedents);

// Gcd/max fold of the antecedents' scaling data; empty if any antecedent
// lacks it.
std::optional<ScaleCore> combine_pyth(std::span<const ClauseMeta> antecedents);

}  // namespace esat
