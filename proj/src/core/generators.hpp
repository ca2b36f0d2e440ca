#pragma once

#include <array>
#include <vector>

#include "core/formula.hpp"

namespace esat {

// CNF encoding of the van der Waerden number problem W(j,k) at size n:
// variable i <=> integer i gets color A. For every arithmetic progression of
// length j inside 1..n a positive clause forbids all-A, and for every
// progression of length k a negative clause forbids all-B. Each clause
// carries exact gliding bounds: a progression starting at i with gap d can
// shift i-1 steps toward zero and (n - (len-1)d) - i steps away before its
// image leaves 1..n.
Formula gen_vdw(int j, int k, int n);

// All Pythagorean triples a < b < c with a^2 + b^2 = c^2 and c <= n, in
// lexicographic order.
std::vector<std::array<int, 3>> enumerate_triples(int n);

// CNF encoding of the Boolean Pythagorean triples problem over 1..n:
// for each triple, one positive and one negative clause (no triple may be
// monochromatic). Each clause carries its scaling core: the gcd of the
// triple and its largest member.
Formula gen_pythagorean(int n);

}  // namespace esat
