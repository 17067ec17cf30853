#pragma once

#include "beadhom/beads.hpp"
#include "beadhom/characters.hpp"
#include "beadhom/irreps.hpp"
#include "beadhom/linalg.hpp"

#include <functional>

namespace beadhom {

enum class H0Model { hfi_tr, beads, beads_signed };

// Pointwise signed action: (g, basis index) -> (image index, sign).
using PointAction = std::function<std::pair<int, int>(const Perm&, int)>;

// Degree-zero cokernel problem: an ambient basis carrying commuting signed
// actions of S_N (the FI direction) and S_n, together with the assembled
// structure map from all one-point-smaller sources. The source carries the
// same kind of actions (S_N permutes the summands).
struct H0Problem {
    int N = 0, n = 0;
    int ambient_dim = 0, source_dim = 0;
    RationalMatrix incoming;              // ambient_dim x source_dim
    PointAction relabel_one, columns_one;            // ambient actions
    PointAction src_relabel_one, src_columns_one;    // source actions
    std::vector<int> orbit_reps;          // ambient S_N-orbit representatives
    std::vector<int> src_orbit_reps;
};

H0Problem build_h0_problem(int N, int n, H0Model model);

SignedPerm signed_perm_of(const PointAction& act, const Perm& g, int dim);

// exact generator-level equivariance of the incoming map; throws on failure
void check_equivariance(const H0Problem& p);

struct H0Value {
    int dim = 0;               // cokernel dimension
    BiClassFunction table;     // quotient trace on each (class, class) pair
};

// Full-space cokernel with the character table of the quotient; intended for
// desk sizes (the ambient is eliminated without slicing).
H0Value h0_cokernel(const H0Problem& p);

// Central projector p_rho = (dim rho / N!) sum_g chi^rho(g^{-1}) g as an
// explicit matrix. |G| = N! terms; meant for moderate dimensions.
RationalMatrix central_projector(const Partition& rho, const PointAction& act, int N, int dim);

struct IsotypicalSlice {
    EchelonBasis ambient_slice;   // image of p_rho on the ambient
    EchelonBasis image_slice;     // p_rho applied to the incoming image
};

// Literal projector-based slice of an H0 problem.
IsotypicalSlice isotypical_slice(const H0Problem& p, const Partition& rho);

// rho-slice of the cokernel as an S_n-module. Computed on the evaluated
// Hom-space Hom_{S_N}(S^rho, -) transported into the ambient, which has the
// multiplicity-space dimension (slice dim / dim rho); same output as slicing
// with the central projector.
Decomposition h0_slice(const H0Problem& p, const Partition& rho);

// Full S_N x S_n decomposition of the requested H0 quotient, assembled from
// per-rho slices (beads models) or by direct elimination (hfi model).
// max_N is a configurable size cap.
BiDecomposition decompose_h0(int N, int n, H0Model model, int max_N = 8);

} // namespace beadhom
