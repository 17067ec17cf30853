#pragma once

#include "beadhom/characters.hpp"
#include "beadhom/linalg.hpp"
#include "beadhom/partition.hpp"
#include "beadhom/permutation.hpp"

#include <string>
#include <vector>

namespace beadhom {

// Explicit matrix model of an S_n action: images of the adjacent
// transpositions s_1..s_{n-1} on a finite basis, exact rational entries.
struct MatrixRep {
    int degree = 0;   // n
    int dim = 0;
    std::vector<RationalMatrix> gens;       // degree-1 matrices
    std::vector<std::string> basis_labels;  // optional

    RationalMatrix action_of(const Perm& p) const;
    ClassFunction character() const;
    // model for the subgroup S_m on the first m letters
    MatrixRep restricted(int m) const;
};

struct EquivariantMap {
    // matrix * source(s_i) == target(s_i) * matrix for every common generator
    MatrixRep source, target;
    RationalMatrix matrix;
};

// exact check of the intertwining property for the first `gens` generators
bool is_equivariant(const RationalMatrix& m, const MatrixRep& src, const MatrixRep& tgt,
                    int gens);

// Standard Young tableau, rows of letters 1..n.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> standard_tableaux(const Partition& lambda);

// Young's seminormal form over exact rationals; basis = standard tableaux in
// last-letter-adapted order, so restriction to S_{n-1} is block diagonal with
// blocks in removable-corner order (top corner first).
MatrixRep seminormal(const Partition& lambda);

// Column range of the S^{nu'} block inside seminormal(nu) restricted to
// S_{n-1}: the Pieri inclusion as a coordinate matrix (dim nu x dim nu').
RationalMatrix pieri_inclusion(const Partition& nu_prime, const Partition& nu);

// Model of the skew module S^{lambda/alpha}: the space of S_a-intertwiners
// from S^alpha into S^lambda restricted to the last a letters, with
// S_{n-a} acting on the first n-a letters by postcomposition.
struct SkewModule {
    Partition lambda, alpha;
    int letters = 0;         // n - a
    MatrixRep rep;           // S_{n-a} action
    int lambda_dim = 0, alpha_dim = 0;
    std::vector<SparseVec> intertwiners;   // flattened dim(lambda) x dim(alpha)
    EchelonBasis coords{0};                // coordinates on the intertwiner space

    // coordinates of a flattened intertwiner matrix
    std::vector<Rat> express(const RationalMatrix& f) const;
};

SkewModule skew_module(const Partition& lambda, const Partition& alpha);

// The canonical surjection S^{lambda/beta}| -> S^{lambda/alpha} for
// beta < alpha < lambda with |beta| = |alpha| - 1, as a matrix in the
// intertwiner bases; normalized so its first nonzero entry (row-major) is 1.
// Equivariant for S_{n-a} on the first n-a letters.
RationalMatrix skew_surjection(const SkewModule& dom, const SkewModule& tgt);
RationalMatrix skew_surjection(const Partition& lambda, const Partition& beta,
                               const Partition& alpha);

struct Invariants {
    MatrixRep rep;              // induced action on the fixed subspace
    RationalMatrix inclusion;   // ambient_dim x fixed_dim
};

// Fixed subspace of a commuting involution, with the induced action of the
// first `acting_gens` generators of r. Throws if the involution does not
// square to the identity or fails to commute with those generators.
Invariants s2_invariants(const MatrixRep& r, const RationalMatrix& involution,
                         int acting_gens);

// Induction along S_{n-1} < S_n (the subgroup fixing the last letter).
// Coset basis: blocks indexed by the coset representative c_i = the cycle
// sending the last letter to position i.
MatrixRep induce_matrix(const MatrixRep& r);
// Adjoint of an S_{n-1}-map f : A -> B| into an S_n-module B.
RationalMatrix induce_map(const RationalMatrix& f, const MatrixRep& b);

// Tensor product of two models of the same degree (diagonal action).
MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b);

} // namespace beadhom
