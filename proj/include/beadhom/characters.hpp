#pragma once

#include "beadhom/partition.hpp"
#include "beadhom/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace beadhom {

// Character table of S_n, computed once per degree and cached. Values are
// integers (Murnaghan-Nakayama); rows indexed by the irreducible's partition,
// columns by cycle type, both in partitions_of(n) order.
struct CharTable {
    int n = 0;
    std::vector<Partition> parts;               // partitions_of(n)
    std::vector<std::uint64_t> class_size;      // |conjugacy class|
    std::vector<std::vector<long long>> chi;    // chi[lambda_idx][class_idx]
    std::uint64_t factorial = 1;

    int index(const Partition& p) const;
};

const CharTable& character_table(int n);

// Rational-valued class function on S_n; values indexed by cycle type in
// partitions_of(n) order.
struct ClassFunction {
    int n = 0;
    std::vector<Rat> values;

    ClassFunction() = default;
    ClassFunction(int n_, std::vector<Rat> v) : n(n_), values(std::move(v)) {}

    Rat& operator[](int c) { return values[c]; }
    const Rat& operator[](int c) const { return values[c]; }
};

// Multiplicities of irreducibles of a single symmetric group.
struct Decomposition {
    int n = 0;
    std::map<Partition, long> mult;   // only strictly positive entries stored

    void add(const Partition& lambda, long m);
    long operator[](const Partition& lambda) const;
    bool operator==(const Decomposition&) const = default;
    bool empty() const { return mult.empty(); }
    long total_dim() const;
    std::string str() const;
};

// Multiplicities of S^rho x S^gamma over S_N x S_n.
struct BiDecomposition {
    int N = 0, n = 0;
    std::map<std::pair<Partition, Partition>, long> mult;

    void add(const Partition& rho, const Partition& gamma, long m);
    long operator[](const std::pair<Partition, Partition>& key) const;
    bool operator==(const BiDecomposition&) const = default;
    bool empty() const { return mult.empty(); }
    std::string str() const;
};

// Class function on S_N x S_n (values on class pairs).
struct BiClassFunction {
    int N = 0, n = 0;
    std::vector<std::vector<Rat>> values;   // [class of S_N][class of S_n]

    BiClassFunction() = default;
    BiClassFunction(int N_, int n_);
};

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction regular_character(int n);
ClassFunction permutation_character_natural(int n);   // S_n on {1..n}

Rat inner_product(const ClassFunction& f, const ClassFunction& g);

// Writes f as a nonnegative integral combination of irreducible characters;
// throws if any multiplicity is negative or non-integral.
Decomposition decompose(const ClassFunction& f);
BiDecomposition decompose_bi(const BiClassFunction& f);

ClassFunction add(const ClassFunction& f, const ClassFunction& g);
ClassFunction sub(const ClassFunction& f, const ClassFunction& g);
ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction character_of(const Decomposition& d);

// Induction along the Young subgroup S_a x S_b < S_{a+b}.
ClassFunction induce(const ClassFunction& f, const ClassFunction& g);
// Restriction along S_m < S_n (fix the last n-m letters).
ClassFunction restrict_to(const ClassFunction& f, int m);

// Littlewood-Richardson coefficient c^lambda_{alpha,beta}.
long littlewood_richardson(const Partition& lambda, const Partition& alpha,
                           const Partition& beta);

// Decomposition of the skew module S^{lambda/alpha} over S_{|lambda|-|alpha|};
// empty when alpha is not contained in lambda.
Decomposition skew_decomposition(const Partition& lambda, const Partition& alpha);

// Diagonal tensor product S^nu (x) S^lambda over S_n.
Decomposition kronecker(const Partition& nu, const Partition& lambda);

// k S_{m+n} tensor_{S_m} (S^mu x S^nu) as an S_{m+n} x S_n-module:
// multiplicity of S^rho x S^gamma is sum_lambda c^rho_{mu lambda} k^gamma_{nu lambda}.
BiDecomposition induced_bimodule_decomposition(const Partition& mu, const Partition& nu);

} // namespace beadhom
