#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/types.hpp"

namespace esat {

// A propositionally consistent permutation of literals: sigma(-l) = -sigma(l)
// and sigma is a bijection on its support. Literals outside the support map
// to themselves.
class Permutation {
 public:
  // Adds the mapping a -> b together with the implied -a -> -b. Re-stating an
  // existing mapping is fine; mapping a literal to two different targets or
  // two literals to the same target is an error.
  void add_mapping(Lit a, Lit b);

  Lit apply(Lit l) const {
    auto it = map_.find(l);
    return it == map_.end() ? l : it->second;
  }

  Clause apply(const Clause& c) const;

  size_t support_size() const { return map_.size(); }
  const std::unordered_map<Lit, Lit>& mappings() const { return map_; }

  // Bijectivity check over the accumulated support.
  void validate() const;

 private:
  std::unordered_map<Lit, Lit> map_;
};

// Parses a generator file: one permutation per line, written as a product of
// cycles over signed integers, e.g. "[ 1 7 ] [ 2 6 ] [ 3 5 ]". Parentheses
// are accepted in place of brackets and commas are treated as whitespace.
// For every cycle the negated cycle is added implicitly.
std::vector<Permutation> parse_generators(std::string_view text);
std::vector<Permutation> parse_generators_file(const std::string& path);

}  // namespace esat
