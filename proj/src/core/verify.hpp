#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/formula.hpp"

namespace esat {

// True iff the total assignment (one literal per variable) satisfies every
// clause. Errors if the assignment is partial or out of range.
bool check_model(const Formula& f, const std::vector<Lit>& model);

enum class Implied { Yes, No, Unknown };
const char* to_string(Implied r);

// Decides f |= c by refutation: a fresh sub-solver (no extra-clause sources)
// searches f with every literal of c asserted false, under the given
// conflict budget. Unsatisfiable => implied; satisfiable => not implied;
// budget exhausted => unknown.
Implied check_implied(const Formula& f, const Clause& c, int64_t max_conflicts = 1000000);

// Exhaustive truth-table check, at most 24 variables. Returns a model
// through `model` when satisfiable and it is non-null.
bool brute_force_sat(const Formula& f, std::vector<Lit>* model = nullptr);

// One gliding-bounds violation: clause index plus the offending shift.
// in_formula reports the failure direction: a shift inside the bounds whose
// image is missing, or the first shift past a bound whose image is present
// (bounds are required to be exactly maximal).
struct GlideViolation {
  size_t clause;
  int shift;
  bool missing;  // true: in-bounds image absent; false: out-of-bounds image present
};

// Set-membership audit of every clause that carries gliding bounds: all
// shifts within the bounds must land on clauses of f, and one step past
// either bound must not. Errors if no clause carries bounds.
std::vector<GlideViolation> glide_membership_oracle(const Formula& f);

std::string describe(const Formula& f, const GlideViolation& v);

}  // namespace esat
