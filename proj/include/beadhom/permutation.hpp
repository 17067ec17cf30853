#pragma once

#include "beadhom/partition.hpp"

#include <vector>

namespace beadhom {

// One-line notation, 0-based: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q); // (p*q)(i) = p(q(i))
Perm perm_inverse(const Perm& p);
int perm_sign(const Perm& p);
Partition cycle_type(const Perm& p);

// Representative of the conjugacy class with cycle type mu: cycles in
// decreasing length, filled with consecutive integers.
Perm class_representative(const Partition& mu, int n);

// Word in adjacent transpositions s_i = (i, i+1), 0-based generator indices,
// such that p = s_{w[0]} * s_{w[1]} * ... * s_{w.back()} (composition of
// functions, leftmost applied last).
std::vector<int> adjacent_word(const Perm& p);

// All permutations of {0..n-1} in a fixed deterministic order.
std::vector<Perm> all_permutations(int n);

} // namespace beadhom
