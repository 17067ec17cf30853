#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beadhom/partition.hpp"
#include "beadhom/permutation.hpp"

#include <set>

using namespace beadhom;

namespace {

// independent oracle: number of partitions via Euler's pentagonal recurrence
long pentagonal_p(int n) {
    static std::vector<long> p{1};
    while ((int)p.size() <= n) {
        int m = (int)p.size();
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (k % 2) ? 1 : -1;
            if (g1 <= m) s += sign * p[m - g1];
            if (g2 <= m) s += sign * p[m - g2];
        }
        p.push_back(s);
    }
    return p[n];
}

// independent oracle: count standard tableaux by direct backtracking
long count_syt(const Partition& shape) {
    int n = shape.size();
    std::vector<int> filled(shape.length(), 0);
    auto rec = [&](auto&& self, int letter) -> long {
        if (letter > n) return 1;
        long total = 0;
        for (int r = 0; r < shape.length(); ++r) {
            if (filled[r] >= shape.part(r)) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            total += self(self, letter + 1);
            --filled[r];
        }
        return total;
    };
    return rec(rec, 1);
}

} // namespace

TEST_CASE("partitions_of small values") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("partition counts match the pentagonal recurrence") {
    for (int n = 0; n <= 12; ++n) CHECK((long)partitions_of(n).size() == pentagonal_p(n));
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("containment order") {
    CHECK(contains(Partition{1}, Partition{2, 1}));
    CHECK(!contains(Partition{2}, Partition{1, 1}));
    CHECK(contains(Partition{1, 1}, Partition{2, 1, 1}));
    CHECK(contains(Partition{}, Partition{3}));
}

TEST_CASE("containment is a partial order with the size property") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& a : partitions_of(n)) {
            CHECK(contains(a, a));
            for (int m = 0; m <= n; ++m)
                for (const auto& b : partitions_of(m)) {
                    if (contains(b, a)) {
                        CHECK(b.size() <= a.size());
                        if (b.size() == a.size()) CHECK(a == b);
                        if (contains(a, b)) CHECK(a == b);
                    }
                }
        }
    }
    // transitivity sample at n <= 6
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const auto& b : partitions_of(m))
                    for (int l = 0; l <= m; ++l)
                        for (const auto& c : partitions_of(l))
                            if (contains(c, b) && contains(b, a)) CHECK(contains(c, a));
}

TEST_CASE("hat transpose concat") {
    CHECK(hat(Partition{3, 2, 1}) == Partition{2, 1});
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(concat(3, Partition{2, 1}) == Partition{3, 2, 1});
    CHECK_THROWS(concat(1, Partition{2, 1}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("irrep dimensions") {
    CHECK(irrep_dimension(Partition{2, 1}) == 2);
    CHECK(irrep_dimension(Partition{2, 1}) == (std::uint64_t)count_syt(Partition{2, 1}));
    for (int n = 1; n <= 7; ++n) CHECK(irrep_dimension(Partition{n}) == 1);
    for (int n = 0; n <= 9; ++n) {
        std::uint64_t total = 0, fact = 1;
        for (int k = 2; k <= n; ++k) fact *= (std::uint64_t)k;
        for (const auto& p : partitions_of(n)) {
            std::uint64_t d = irrep_dimension(p);
            CHECK(d == (std::uint64_t)count_syt(p));
            total += d * d;
        }
        CHECK(total == fact);
    }
}

TEST_CASE("text form round trip") {
    CHECK(Partition({3, 1, 1}).str() == "[3,1,1]");
    CHECK(Partition{}.str() == "[]");
    CHECK(Partition::parse("[3,1,1]") == Partition{3, 1, 1});
    CHECK(Partition::parse("[]") == Partition{});
    CHECK_THROWS(Partition::parse("3,1"));
    CHECK_THROWS(Partition::parse("[1,3]"));
}

TEST_CASE("permutation helpers") {
    Perm p{2, 0, 1, 4, 3};   // cycle type (3,2)
    CHECK(cycle_type(p) == Partition{3, 2});
    CHECK(perm_sign(p) == 1 * -1);
    Perm r = class_representative(Partition{3, 2}, 5);
    CHECK(cycle_type(r) == Partition{3, 2});
    // adjacent word reconstructs the permutation
    for (const Perm& q : all_permutations(4)) {
        Perm acc = perm_identity(4);
        for (int g : adjacent_word(q)) {
            Perm s = perm_identity(4);
            std::swap(s[g], s[g + 1]);
            acc = perm_compose(acc, s);
        }
        CHECK(acc == q);
    }
    CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(5));
}
