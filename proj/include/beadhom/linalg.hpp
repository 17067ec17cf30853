#pragma once

#include "beadhom/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace beadhom {

// Sparse rational vector: (index, value) pairs, sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Rat& c);
// a + c*b
SparseVec sparse_axpy(const SparseVec& a, const Rat& c, const SparseVec& b);
Rat sparse_entry(const SparseVec& a, int i);

// Sparse rational matrix, column-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    static RationalMatrix identity(int k);
    static RationalMatrix from_dense(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& column(int j) const { return col_[j]; }
    SparseVec& column(int j) { return col_[j]; }
    void set(int i, int j, const Rat& v);
    Rat get(int i, int j) const;
    std::int64_t nnz() const;

    SparseVec apply(const SparseVec& v) const;             // M * v
    RationalMatrix multiply(const RationalMatrix& o) const; // M * o
    RationalMatrix transposed() const;
    RationalMatrix scaled(const Rat& c) const;
    Rat trace() const;
    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const;

    // stack horizontally: [A | B]
    static RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);
    // direct sum placement helper: copy src into this at row/col offset
    void insert_block(int row0, int col0, const RationalMatrix& src);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> col_;
};

// Kronecker product A (x) B acting on basis pairs (i,j) -> i*B.rows()+j.
RationalMatrix kronecker_product(const RationalMatrix& a, const RationalMatrix& b);

// Incremental reduced row echelon basis of a subspace of k^ambient.
// Vectors are stored fully reduced with unit pivot entries; pivot positions
// strictly increase along insertion history only logically (a pivot->slot map
// keeps lookups O(log)). Insertion order independence of the resulting
// reduced basis holds because the stored rows are the canonical RREF of the
// span.
class EchelonBasis {
public:
    explicit EchelonBasis(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int rank() const { return (int)rows_.size(); }

    // Reduce v against the basis; returns the residual (empty if v in span).
    SparseVec reduce(const SparseVec& v) const;
    // Insert v; returns true if the rank grew.
    bool insert(const SparseVec& v);
    bool contains_vector(const SparseVec& v) const { return reduce(v).empty(); }

    // Expansion coefficients of v over the stored basis rows; throws if v is
    // not in the span.
    std::vector<Rat> coefficients(const SparseVec& v) const;

    const std::vector<SparseVec>& vectors() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool has_pivot(int i) const { return pivot_slot_.count(i) != 0; }

private:
    int ambient_;
    std::vector<SparseVec> rows_;   // fully reduced, unit pivot
    std::vector<int> pivots_;       // pivots_[k] = pivot index of rows_[k]
    std::map<int, int> pivot_slot_;
};

// Echelonized basis of the column space. Dense elimination below 512x512,
// sparse insertion above; both produce the same canonical reduced basis.
EchelonBasis image_basis(const RationalMatrix& m);
int rank(const RationalMatrix& m);

// Rank over F_p for a fixed 30-bit prime; a fast precheck only, every
// reported rank is recomputed exactly.
int rank_mod_prime(const RationalMatrix& m);

struct Cokernel {
    int ambient = 0;
    std::vector<int> quotient_rows;   // non-pivot coordinates, increasing
    RationalMatrix projection;        // quotient_dim x ambient
    int dim() const { return (int)quotient_rows.size(); }
};

// Coordinate complement to image(M): standard basis vectors at non-pivot
// positions, together with the projection of the ambient space onto them.
Cokernel cokernel(const RationalMatrix& m);

// Basis of { x : M x = 0 }, canonical w.r.t. the RREF of the rows of M.
std::vector<SparseVec> kernel_basis(const RationalMatrix& m);

// Signed permutation action on basis coordinates: v -> sign[i] * e_{img[i]}.
struct SignedPerm {
    std::vector<int> img;
    std::vector<int> sign;

    int dim() const { return (int)img.size(); }
    SparseVec apply(const SparseVec& v) const;
    Rat trace() const;
};

// Trace of the action restricted to the invariant subspace spanned by W.
// Invariance g.W <= span(W) is checked exactly; throws on failure.
Rat restricted_trace(const RationalMatrix& g_action, const EchelonBasis& w);
Rat restricted_trace(const SignedPerm& g_action, const EchelonBasis& w);
// trace on ambient minus trace on W (the quotient by an invariant subspace)
Rat quotient_trace(const RationalMatrix& g_action, const EchelonBasis& w);
Rat quotient_trace(const SignedPerm& g_action, const EchelonBasis& w);

} // namespace beadhom
