#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beadhom/homology.hpp"

using namespace beadhom;

TEST_CASE("hfi cokernel smallest cases") {
    // (a,b)=(1,1): surjective structure map, cokernel 0
    H0Problem p11 = build_h0_problem(1, 1, H0Model::hfi_tr);
    CHECK(h0_cokernel(p11).dim == 0);

    // (a,b)=(1,2): dim 1, character sgn x sgn
    H0Problem p12 = build_h0_problem(1, 2, H0Model::hfi_tr);
    H0Value v = h0_cokernel(p12);
    CHECK(v.dim == 1);
    BiDecomposition d = decompose_bi(v.table);
    CHECK(d.mult.size() == 1);
    CHECK(d[{Partition{1}, Partition{1, 1}}] == 1);
}

TEST_CASE("signed beads cokernel at (2,1) vanishes") {
    H0Problem p = build_h0_problem(2, 1, H0Model::beads_signed);
    CHECK(p.ambient_dim == 1);
    CHECK(h0_cokernel(p).dim == 0);
}

TEST_CASE("unsigned beads structure map at (2,1) is surjective") {
    H0Problem p = build_h0_problem(2, 1, H0Model::beads);
    CHECK(p.ambient_dim == 2);
    CHECK(h0_cokernel(p).dim == 0);
}

TEST_CASE("hfi decomposition matches the expected shape at (2,4)") {
    BiDecomposition d = decompose_h0(2, 4, H0Model::hfi_tr);
    CHECK(d.mult.size() == 2);
    CHECK(d[{Partition{2}, Partition{2, 2}}] == 1);
    CHECK(d[{Partition{1, 1}, Partition{2, 1, 1}}] == 1);
}

TEST_CASE("central projector properties") {
    // projector idempotence and completeness on k Beads(4,3)
    H0Problem p = build_h0_problem(4, 3, H0Model::beads);
    int total = 0;
    for (const Partition& rho : partitions_of(4)) {
        RationalMatrix proj = central_projector(rho, p.relabel_one, 4, p.ambient_dim);
        CHECK(proj.multiply(proj) == proj);
        IsotypicalSlice s = isotypical_slice(p, rho);
        total += s.ambient_slice.rank();
        // slice dim = dim rho * multiplicity
        long mult = s.ambient_slice.rank() / (long)irrep_dimension(rho);
        CHECK(mult * (long)irrep_dimension(rho) == s.ambient_slice.rank());
    }
    CHECK(total == p.ambient_dim);

    // sgn slice dimension equals the multiplicity of sgn computed by characters
    Partition sgn4{1, 1, 1, 1};
    IsotypicalSlice s = isotypical_slice(p, sgn4);
    const CharTable& t4 = character_table(4);
    Rat m(0);
    for (size_t c = 0; c < t4.parts.size(); ++c) {
        SignedPerm a = signed_perm_of(p.relabel_one, class_representative(t4.parts[c], 4),
                                      p.ambient_dim);
        m += Rat(mpz_class(t4.class_size[c])) * a.trace() * Rat((long)t4.chi[t4.index(sgn4)][c]);
    }
    m /= Rat(mpz_class(t4.factorial));
    CHECK(Rat(s.ambient_slice.rank()) == m * Rat((long)irrep_dimension(sgn4)));
}

TEST_CASE("sliced and full cokernels agree on small bead problems") {
    for (int N = 2; N <= 5; ++N)
        for (int n = (N + 1) / 2; n <= N; ++n)
            for (H0Model model : {H0Model::beads, H0Model::beads_signed}) {
                H0Problem p = build_h0_problem(N, n, model);
                H0Value full = h0_cokernel(p);
                BiDecomposition whole = decompose_bi(full.table);
                BiDecomposition sliced = decompose_h0(N, n, model);
                CHECK(whole == sliced);
                // slice dims reconstruct the quotient dimension
                long total = 0;
                for (const auto& [key, m] : sliced.mult)
                    total +=
                        (long)irrep_dimension(key.first) * (long)irrep_dimension(key.second) * m;
                CHECK(total == full.dim);
            }
}

TEST_CASE("projector-sliced cokernel agrees with the Hom-transport slice") {
    H0Problem p = build_h0_problem(4, 3, H0Model::beads_signed);
    for (const Partition& rho : partitions_of(4)) {
        IsotypicalSlice s = isotypical_slice(p, rho);
        long coker_dim = s.ambient_slice.rank() - s.image_slice.rank();
        Decomposition slice = h0_slice(p, rho);
        CHECK((long)irrep_dimension(rho) * slice.total_dim() == coker_dim);
    }
}

TEST_CASE("signed beads slices: known values") {
    // (N,n)=(5,4), rho=(1^5) -> S^{(2,1,1)}
    H0Problem p54 = build_h0_problem(5, 4, H0Model::beads_signed);
    Decomposition d = h0_slice(p54, Partition{1, 1, 1, 1, 1});
    CHECK(d.mult.size() == 1);
    CHECK(d[Partition{2, 1, 1}] == 1);

    // (N,n)=(4,3), rho=(2,1,1) -> S^{(2,1)} + S^{(3)}
    H0Problem p43 = build_h0_problem(4, 3, H0Model::beads_signed);
    Decomposition e = h0_slice(p43, Partition{2, 1, 1});
    CHECK(e.mult.size() == 2);
    CHECK(e[Partition{2, 1}] == 1);
    CHECK(e[Partition{3}] == 1);
}

TEST_CASE("equivariance violations are detected") {
    H0Problem p = build_h0_problem(3, 2, H0Model::beads);
    p.incoming.set(0, 0, p.incoming.get(0, 0) + 7);   // break it
    CHECK_THROWS(h0_cokernel(p));
}

TEST_CASE("empty ranges") {
    CHECK(decompose_h0(3, 5, H0Model::beads_signed).empty());   // N < n
    CHECK(decompose_h0(5, 2, H0Model::beads_signed).empty());   // N > 2n
    CHECK(decompose_h0(4, 2, H0Model::hfi_tr).empty());         // a > b
    CHECK_THROWS(decompose_h0(9, 9, H0Model::beads_signed));    // cap
}
