#include "core/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace esat {

std::vector<uint32_t> select_for_deletion(std::vector<DeletionCandidate> candidates, double ratio) {
  if (ratio < 0) ratio = 0;
  if (ratio > 1) ratio = 1;
  size_t quota = static_cast<size_t>(std::floor(ratio * static_cast<double>(candidates.size())));
  std::sort(candidates.begin(), candidates.end(), [](const DeletionCandidate& a, const DeletionCandidate& b) {
    if (a.activity != b.activity) return a.activity < b.activity;
    return a.id < b.id;
  });
  std::vector<uint32_t> out;
  out.reserve(quota);
  for (const DeletionCandidate& c : candidates) {
    if (out.size() >= quota) break;
    if (!c.locked) out.push_back(c.id);
  }
  return out;
}

}  // namespace esat
