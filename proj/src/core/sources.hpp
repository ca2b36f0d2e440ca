#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "core/permutation.hpp"
#include "core/types.hpp"

namespace esat {

// Shift every literal's magnitude by k (k < 0 moves toward zero), keeping
// polarity: glide((1 2 3), +1) = (2 3 4), glide((-7 -5 10), -1) = (-6 -4 9).
// Every shifted magnitude must stay >= 1.
Clause glide_clause(const Clause& c, int k);

// One emitted extra clause together with its own metadata.
struct Emission {
  Clause lits;
  ClauseMeta meta;
};

// All gliding images licensed by the bounds in m: shifts 1..toward_zero
// downward and 1..away upward, each with bounds adjusted by the shift.
// No emissions if m is non-symmetric or carries no bounds.
std::vector<Emission> emit_gliding(const Clause& c, const ClauseMeta& m);

// All multiplicative images licensed by the scaling data in m for a
// universe 1..n: factors i in 1..floor(n*gcd/maxvar), i != gcd, each image
// i*c/gcd with scaling data (i, maxvar*i/gcd).
std::vector<Emission> emit_pythagorean(const Clause& c, const ClauseMeta& m, int n);

// A source of extra clauses: invoked once per learned clause with the
// clause's folded metadata; emits candidate extra clauses into `sink`.
class SymmetrySource {
 public:
  virtual ~SymmetrySource() = default;
  virtual const char* name() const = 0;
  virtual void emit(const Clause& c, const ClauseMeta& m,
                    const std::function<void(Emission)>& sink) const = 0;
};

class GlidingSource : public SymmetrySource {
 public:
  const char* name() const override { return "gliding"; }
  void emit(const Clause& c, const ClauseMeta& m,
            const std::function<void(Emission)>& sink) const override;
};

class ScalingSource : public SymmetrySource {
 public:
  explicit ScalingSource(int universe) : n_(universe) {}
  const char* name() const override { return "pythagorean"; }
  void emit(const Clause& c, const ClauseMeta& m,
            const std::function<void(Emission)>& sink) const override;

 private:
  int n_;
};

// Applies each generator permutation once per learned clause (no closure
// under composition). Images carry no glide/scale data.
class DynSymSource : public SymmetrySource {
 public:
  explicit DynSymSource(std::vector<Permutation> gens) : gens_(std::move(gens)) {}
  const char* name() const override { return "dyn-sym"; }
  void emit(const Clause& c, const ClauseMeta& m,
            const std::function<void(Emission)>& sink) const override;
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  std::vector<Permutation> gens_;
};

// Acceptance filter for candidate extra clauses, evaluated against the
// current partial assignment both at emission time and again at install
// time:
//   F1  at most max_nonfalse literals not currently false
//   F2  partial LBD (distinct levels of the assigned literals) <= lbd_cap
//   F3  size <= size_cap
// Caps <= 0 disable the corresponding test.
struct FilterParams {
  int max_nonfalse = 3;
  int lbd_cap = 0;
  int size_cap = 20;
};

// values_by_var[v] is +1/-1/0 for variable v true/false/unassigned;
// levels_by_var[v] is only read where the variable is assigned.
bool filter_accepts(std::span<const Lit> lits, const FilterParams& p,
                    std::span<const int8_t> values_by_var, std::span<const int> levels_by_var);

}  // namespace esat
