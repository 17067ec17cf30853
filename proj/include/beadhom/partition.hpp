#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace beadhom {

// Integer partition: weakly decreasing sequence of positive parts. The empty
// sequence is the (unique) partition of 0 and is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // |lambda| = sum of parts
    int length() const { return (int)parts_.size(); }
    int part(int i) const;                  // 0-indexed, 0 beyond the length
    int first() const { return part(0); }
    bool empty() const { return parts_.empty(); }

    // Enumeration order of partitions_of: larger-first lexicographic within a
    // size, sizes increasing across sizes. Gives deterministic map keys.
    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const;

    std::string str() const;                // canonical text form [3,1,1]
    static Partition parse(const std::string& s);

private:
    std::vector<int> parts_;
};

// All partitions of n, each exactly once, in reverse-lexicographic order:
// (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// The containment order on Young diagrams: mu_i <= lambda_i for all i.
// (This is diagram inclusion, not dominance.)
bool contains(const Partition& mu, const Partition& lambda);

Partition hat(const Partition& lambda);        // remove the first part
Partition transpose(const Partition& lambda);  // conjugate diagram
Partition concat(int t, const Partition& mu);  // (t, mu_1, mu_2, ...); t >= mu_1

// Builds S^{a} per the zero-on-non-partitions convention: returns the sequence
// as a Partition if weakly decreasing with positive parts (trailing zeros
// dropped), or nothing if it is not a partition.
bool sequence_is_partition(const std::vector<int>& seq);

// Number of standard Young tableaux of shape lambda (hook length formula).
std::uint64_t irrep_dimension(const Partition& lambda);

// Index of lambda inside partitions_of(|lambda|).
int partition_index(const Partition& lambda);

} // namespace beadhom
