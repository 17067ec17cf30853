#include "beadhom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace beadhom {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
    return sparse_axpy(a, Rat(1), b);
}

SparseVec sparse_scale(const SparseVec& a, const Rat& c) {
    if (c == 0) return {};
    SparseVec r;
    r.reserve(a.size());
    for (const auto& [i, v] : a) r.emplace_back(i, v * c);
    return r;
}

SparseVec sparse_axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
    SparseVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = c * b[j].second;
            if (v != 0) r.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rat v = a[i].second + c * b[j].second;
            if (v != 0) r.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

Rat sparse_entry(const SparseVec& a, int idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& p, int x) { return p.first < x; });
    if (it != a.end() && it->first == idx) return it->second;
    return Rat(0);
}

RationalMatrix RationalMatrix::identity(int k) {
    RationalMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.col_[i] = {{i, Rat(1)}};
    return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rat>>& rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows[0].size() : 0;
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.col_[j].emplace_back(i, rows[i][j]);
    return m;
}

void RationalMatrix::set(int i, int j, const Rat& v) {
    auto& col = col_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& p, int x) { return p.first < x; });
    if (it != col.end() && it->first == i) {
        if (v == 0)
            col.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        col.insert(it, {i, v});
    }
}

Rat RationalMatrix::get(int i, int j) const { return sparse_entry(col_[j], i); }

std::int64_t RationalMatrix::nnz() const {
    std::int64_t t = 0;
    for (const auto& c : col_) t += (std::int64_t)c.size();
    return t;
}

SparseVec RationalMatrix::apply(const SparseVec& v) const {
    SparseVec acc;
    for (const auto& [j, c] : v) acc = sparse_axpy(acc, c, col_[j]);
    return acc;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("multiply: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) r.col_[j] = apply(o.col_[j]);
    return r;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix r(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : col_[j]) r.col_[i].emplace_back(j, v);
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rat& c) const {
    RationalMatrix r(rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.col_[j] = sparse_scale(col_[j], c);
    return r;
}

Rat RationalMatrix::trace() const {
    Rat t(0);
    for (int j = 0; j < std::min(rows_, cols_); ++j) t += get(j, j);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row mismatch");
    RationalMatrix r(a.rows_, a.cols_ + b.cols_);
    for (int j = 0; j < a.cols_; ++j) r.col_[j] = a.col_[j];
    for (int j = 0; j < b.cols_; ++j) r.col_[a.cols_ + j] = b.col_[j];
    return r;
}

void RationalMatrix::insert_block(int row0, int col0, const RationalMatrix& src) {
    for (int j = 0; j < src.cols_; ++j)
        for (const auto& [i, v] : src.col_[j]) set(row0 + i, col0 + j, v);
}

RationalMatrix kronecker_product(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (const auto& [ia, va] : a.column(ja))
            for (int jb = 0; jb < b.cols(); ++jb)
                for (const auto& [ib, vb] : b.column(jb))
                    r.set(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
    return r;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
    SparseVec r = v;
    // repeatedly clear the leading pivot entries
    size_t k = 0;
    while (k < r.size()) {
        auto it = pivot_slot_.find(r[k].first);
        if (it == pivot_slot_.end()) {
            ++k;
            continue;
        }
        Rat c = -r[k].second;
        r = sparse_axpy(r, c, rows_[it->second]);
        // entries before position k are non-pivot and remain cleared
    }
    return r;
}

bool EchelonBasis::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    int piv = r[0].first;
    Rat lead = r[0].second;
    r = sparse_scale(r, Rat(1) / lead);
    // back-substitute the new pivot out of the existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
        Rat e = sparse_entry(rows_[k], piv);
        if (e != 0) rows_[k] = sparse_axpy(rows_[k], -e, r);
    }
    pivot_slot_[piv] = (int)rows_.size();
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

std::vector<Rat> EchelonBasis::coefficients(const SparseVec& v) const {
    // rows are fully reduced: the coefficient of row k is just v[pivot_k]
    std::vector<Rat> coeff(rows_.size(), Rat(0));
    SparseVec residual = v;
    for (size_t k = 0; k < rows_.size(); ++k) coeff[k] = sparse_entry(v, pivots_[k]);
    for (size_t k = 0; k < rows_.size(); ++k)
        if (coeff[k] != 0) residual = sparse_axpy(residual, -coeff[k], rows_[k]);
    if (!residual.empty()) throw std::domain_error("coefficients: vector not in span");
    return coeff;
}

namespace {

EchelonBasis image_basis_dense(const RationalMatrix& m) {
    // straightforward dense RREF on the columns viewed as vectors in k^rows
    int R = m.rows();
    std::vector<std::vector<Rat>> rows;
    std::vector<int> pivots;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<Rat> v(R, Rat(0));
        for (const auto& [i, val] : m.column(j)) v[i] = val;
        for (size_t k = 0; k < rows.size(); ++k) {
            if (v[pivots[k]] != 0) {
                Rat c = v[pivots[k]];
                for (int i = 0; i < R; ++i)
                    if (rows[k][i] != 0) v[i] -= c * rows[k][i];
            }
        }
        int piv = -1;
        for (int i = 0; i < R; ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        Rat lead = v[piv];
        for (int i = 0; i < R; ++i)
            if (v[i] != 0) v[i] /= lead;
        for (size_t k = 0; k < rows.size(); ++k) {
            Rat e = rows[k][piv];
            if (e != 0)
                for (int i = 0; i < R; ++i)
                    if (v[i] != 0) rows[k][i] -= e * v[i];
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }
    EchelonBasis b(R);
    for (size_t k = 0; k < rows.size(); ++k) {
        SparseVec s;
        for (int i = 0; i < R; ++i)
            if (rows[k][i] != 0) s.emplace_back(i, rows[k][i]);
        b.insert(s);
    }
    return b;
}

constexpr std::uint64_t kPrime = 1000000007ULL;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_of(const Rat& q) {
    mpz_class num = q.get_num(), den = q.get_den();
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), kPrime);
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), kPrime);
    if (d == 0) throw std::domain_error("rank_mod_prime: denominator divisible by modulus");
    return n * mod_pow(d, kPrime - 2, kPrime) % kPrime;
}

} // namespace

EchelonBasis image_basis(const RationalMatrix& m) {
    if (m.rows() < 512 && m.cols() < 512) return image_basis_dense(m);
    EchelonBasis b(m.rows());
    for (int j = 0; j < m.cols(); ++j) b.insert(m.column(j));
    return b;
}

int rank(const RationalMatrix& m) { return image_basis(m).rank(); }

int rank_mod_prime(const RationalMatrix& m) {
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
    std::vector<int> pivots;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<std::pair<int, std::uint64_t>> v;
        for (const auto& [i, val] : m.column(j)) {
            std::uint64_t x = mod_of(val);
            if (x) v.emplace_back(i, x);
        }
        for (size_t k = 0; k < rows.size() && !v.empty(); ++k) {
            std::uint64_t coef = 0;
            for (const auto& [i, x] : v)
                if (i == pivots[k]) {
                    coef = x;
                    break;
                }
            if (!coef) continue;
            std::uint64_t c = kPrime - coef;
            // v += c * rows[k]
            std::vector<std::pair<int, std::uint64_t>> r;
            size_t a = 0, bidx = 0;
            const auto& w = rows[k];
            while (a < v.size() || bidx < w.size()) {
                if (bidx == w.size() || (a < v.size() && v[a].first < w[bidx].first)) {
                    r.push_back(v[a++]);
                } else if (a == v.size() || w[bidx].first < v[a].first) {
                    std::uint64_t x = c * w[bidx].second % kPrime;
                    if (x) r.emplace_back(w[bidx].first, x);
                    ++bidx;
                } else {
                    std::uint64_t x = (v[a].second + c * w[bidx].second) % kPrime;
                    if (x) r.emplace_back(v[a].first, x);
                    ++a;
                    ++bidx;
                }
            }
            v = std::move(r);
        }
        if (v.empty()) continue;
        std::uint64_t inv = mod_pow(v[0].second, kPrime - 2, kPrime);
        for (auto& [i, x] : v) x = x * inv % kPrime;
        pivots.push_back(v[0].first);
        rows.push_back(std::move(v));
    }
    return (int)rows.size();
}

Cokernel cokernel(const RationalMatrix& m) {
    EchelonBasis img = image_basis(m);
    Cokernel ck;
    ck.ambient = m.rows();
    for (int i = 0; i < m.rows(); ++i)
        if (!img.has_pivot(i)) ck.quotient_rows.push_back(i);
    ck.projection = RationalMatrix((int)ck.quotient_rows.size(), m.rows());
    std::map<int, int> qslot;
    for (size_t k = 0; k < ck.quotient_rows.size(); ++k) qslot[ck.quotient_rows[k]] = (int)k;
    // non-pivot coordinate maps to itself
    for (size_t k = 0; k < ck.quotient_rows.size(); ++k)
        ck.projection.set((int)k, ck.quotient_rows[k], Rat(1));
    // pivot coordinate e_p = row_k - (non-pivot tail)  =>  e_p == -tail mod image
    const auto& rows = img.vectors();
    const auto& pivots = img.pivots();
    for (size_t k = 0; k < rows.size(); ++k) {
        for (const auto& [i, v] : rows[k]) {
            if (i == pivots[k]) continue;
            ck.projection.set(qslot.at(i), pivots[k], -v);
        }
    }
    return ck;
}

std::vector<SparseVec> kernel_basis(const RationalMatrix& m) {
    // RREF of the rows of m
    EchelonBasis rowspace(m.cols());
    RationalMatrix t = m.transposed();
    for (int j = 0; j < t.cols(); ++j) rowspace.insert(t.column(j));
    const auto& rows = rowspace.vectors();
    const auto& pivots = rowspace.pivots();
    std::vector<char> is_pivot(m.cols(), 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<SparseVec> kernel;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        SparseVec v{{j, Rat(1)}};
        for (size_t k = 0; k < rows.size(); ++k) {
            Rat e = sparse_entry(rows[k], j);
            if (e != 0) v.emplace_back(pivots[k], -e);
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        kernel.push_back(std::move(v));
    }
    return kernel;
}

SparseVec SignedPerm::apply(const SparseVec& v) const {
    SparseVec r;
    r.reserve(v.size());
    for (const auto& [i, val] : v) r.emplace_back(img[i], sign[i] > 0 ? val : -val);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

Rat SignedPerm::trace() const {
    long t = 0;
    for (int i = 0; i < dim(); ++i)
        if (img[i] == i) t += sign[i];
    return Rat(t);
}

namespace {

template <typename Action>
Rat restricted_trace_impl(const Action& g, const EchelonBasis& w) {
    const auto& rows = w.vectors();
    Rat t(0);
    for (size_t k = 0; k < rows.size(); ++k) {
        SparseVec gv = g.apply(rows[k]);
        // full invariance check: expansion must have zero residual
        std::vector<Rat> coeff = w.coefficients(gv);   // throws if not in span
        t += coeff[k];
    }
    return t;
}

} // namespace

Rat restricted_trace(const RationalMatrix& g, const EchelonBasis& w) {
    return restricted_trace_impl(g, w);
}
Rat restricted_trace(const SignedPerm& g, const EchelonBasis& w) {
    return restricted_trace_impl(g, w);
}
Rat quotient_trace(const RationalMatrix& g, const EchelonBasis& w) {
    return g.trace() - restricted_trace(g, w);
}
Rat quotient_trace(const SignedPerm& g, const EchelonBasis& w) {
    return g.trace() - restricted_trace(g, w);
}

} // namespace beadhom
