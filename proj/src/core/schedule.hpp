#pragma once

#include <cstdint>
#include <vector>

namespace esat {

// Luby sequence, 1-based: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
inline int64_t luby(int64_t i) {
  // Find the finite subsequence (of length 2^seq - 1) containing i, then
  // chase the offset down; i sits at the end of a subsequence iff the value
  // is a fresh power of two.
  int64_t x = i - 1;
  int64_t size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) / 2;
    --seq;
    x = x % size;
  }
  return int64_t{1} << seq;
}

// Conflict budget for the run with 1-based index `run`.
inline int64_t restart_schedule(int64_t run, int64_t base) { return luby(run) * base; }

// One reducible clause as seen by the deletion policy.
struct DeletionCandidate {
  double activity;
  bool locked;  // reason clauses are never deleted
  uint32_t id;
};

// Picks floor(ratio * candidates) clauses for deletion, least active first,
// skipping locked ones (ties broken by id for determinism). Locked clauses
// count toward the quota's base but are never selected, so at least
// (1 - ratio) of the candidates always survive.
std::vector<uint32_t> select_for_deletion(std::vector<DeletionCandidate> candidates, double ratio);

}  // namespace esat
