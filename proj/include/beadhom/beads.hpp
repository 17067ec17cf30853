#pragma once

#include "beadhom/linalg.hpp"
#include "beadhom/permutation.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace beadhom {

// Injection {1..a} -> {1..b}, stored as the image sequence (1-based values).
struct Injection {
    int a = 0, b = 0;
    std::vector<int> values;
};

std::vector<Injection> enumerate_injections(int a, int b);

// Column arrangement: n columns, each holding one or two labels. Labels are
// an arbitrary subset of positive integers (usually {1..N}), each used once.
// top[i] == 0 means column i is a singleton.
struct BeadArrangement {
    std::vector<int> bottom, top;

    int columns() const { return (int)bottom.size(); }
    int beads() const;
    bool operator==(const BeadArrangement&) const = default;
};

struct BeadArrangementHash {
    std::size_t operator()(const BeadArrangement& b) const;
};

// All arrangements of the given labels into n columns; empty unless
// n <= |labels| <= 2n. Deterministic order.
std::vector<BeadArrangement> enumerate_beads(const std::vector<int>& labels, int n);
std::vector<BeadArrangement> enumerate_beads(int N, int n);   // labels {1..N}

// Basis-indexed linearization of an arrangement set.
struct BeadBasis {
    std::vector<BeadArrangement> elems;
    std::unordered_map<BeadArrangement, int, BeadArrangementHash> index;

    int dim() const { return (int)elems.size(); }
    static BeadBasis build(std::vector<BeadArrangement> elems);
};

// k hom_FI(a,b) -> k hom_FI(a+1,b): [f] -> sum of all extensions of f by the
// new point a+1.
RationalMatrix transpose_structure_map(int a, int b);

// k Beads(labels \ {new_label}, n) -> k Beads(labels, n): place the new label
// on top of each singleton column and sum.
RationalMatrix beads_fi_map(const BeadBasis& source, const BeadBasis& target, int new_label);

// k Beads(labels \ {x,y}, n-1) -> k Beads(labels, n): insert a new doubled
// column at the given position carrying {x,y} in both orders, summed.
RationalMatrix iota_plus_tau(const BeadBasis& source, const BeadBasis& target, int x, int y,
                             int column);

// Antisymmetrization data of k Beads(N,n): canonical signed basis (doubled
// columns ordered bottom < top), projection matrix, and the signed actions.
struct SignedBeads {
    int N = 0, n = 0;
    BeadBasis full;       // all arrangements
    BeadBasis canonical;  // arrangements with bottom < top in doubled columns
    RationalMatrix project;   // dim(canonical) x dim(full)

    // signed permutation action of g in S_N (relabel) on the canonical basis
    SignedPerm relabel_action(const Perm& g) const;
    // action of h in S_n (permute columns) on the canonical basis
    SignedPerm column_action(const Perm& h) const;
};

SignedBeads antisymmetrize(int N, int n);

// Unsigned counterparts on the full basis.
SignedPerm beads_relabel_action(const BeadBasis& basis, const Perm& g);
SignedPerm beads_column_action(const BeadBasis& basis, const Perm& h);

// Closed count C(n, N-n) * N! and the signed dimension count /2^(N-n).
std::uint64_t beads_count(int N, int n);
std::uint64_t signed_beads_dim(int N, int n);

} // namespace beadhom
