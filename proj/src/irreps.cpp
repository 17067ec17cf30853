#include "beadhom/irreps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace beadhom {

RationalMatrix MatrixRep::action_of(const Perm& p) const {
    if ((int)p.size() != degree) throw std::invalid_argument("action_of: degree mismatch");
    RationalMatrix m = RationalMatrix::identity(dim);
    for (int g : adjacent_word(p)) m = m.multiply(gens[g]);
    return m;
}

ClassFunction MatrixRep::character() const {
    const CharTable& t = character_table(degree);
    ClassFunction f(degree, std::vector<Rat>(t.parts.size(), Rat(0)));
    for (size_t c = 0; c < t.parts.size(); ++c)
        f[c] = action_of(class_representative(t.parts[c], degree)).trace();
    return f;
}

MatrixRep MatrixRep::restricted(int m) const {
    if (m > degree) throw std::invalid_argument("restricted: m > degree");
    MatrixRep r;
    r.degree = m;
    r.dim = dim;
    r.gens.assign(gens.begin(), gens.begin() + std::max(0, m - 1));
    r.basis_labels = basis_labels;
    return r;
}

bool is_equivariant(const RationalMatrix& m, const MatrixRep& src, const MatrixRep& tgt,
                    int gens) {
    for (int i = 0; i < gens; ++i)
        if (!(m.multiply(src.gens[i]) == tgt.gens[i].multiply(m))) return false;
    return true;
}

namespace {

struct TabPos {
    std::vector<int> row, col;   // per letter, 0-based
};

TabPos positions(const Tableau& t, int n) {
    TabPos p;
    p.row.assign(n + 1, -1);
    p.col.assign(n + 1, -1);
    for (int r = 0; r < (int)t.size(); ++r)
        for (int c = 0; c < (int)t[r].size(); ++c) {
            p.row[t[r][c]] = r;
            p.col[t[r][c]] = c;
        }
    return p;
}

std::string tableau_label(const Tableau& t) {
    std::ostringstream os;
    for (size_t r = 0; r < t.size(); ++r) {
        if (r) os << '/';
        for (size_t c = 0; c < t[r].size(); ++c) {
            if (c) os << ',';
            os << t[r][c];
        }
    }
    return os.str();
}

std::vector<int> removable_corners(const Partition& p) {
    std::vector<int> rows;
    for (int i = 0; i < p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) rows.push_back(i);
    return rows;
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) return {Tableau{}};
    std::vector<Tableau> out;
    for (int r : removable_corners(lambda)) {
        std::vector<int> parts = lambda.parts();
        parts[r] -= 1;
        for (Tableau t : standard_tableaux(Partition(parts))) {
            if ((int)t.size() <= r) t.resize(r + 1);
            t[r].push_back(n);
            out.push_back(std::move(t));
        }
    }
    return out;
}

MatrixRep seminormal(const Partition& lambda) {
    static std::mutex mtx;
    static std::map<Partition, MatrixRep> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    int n = lambda.size();
    std::vector<Tableau> tabs = standard_tableaux(lambda);
    int d = (int)tabs.size();
    std::map<std::vector<int>, int> index;   // row-of-letter vector -> index
    std::vector<TabPos> pos;
    pos.reserve(d);
    for (int j = 0; j < d; ++j) {
        pos.push_back(positions(tabs[j], n));
        index[pos[j].row] = j;
    }
    MatrixRep rep;
    rep.degree = n;
    rep.dim = d;
    for (int j = 0; j < d; ++j) rep.basis_labels.push_back(tableau_label(tabs[j]));
    for (int k = 1; k < n; ++k) {
        RationalMatrix m(d, d);
        for (int j = 0; j < d; ++j) {
            const TabPos& p = pos[j];
            int r1 = p.row[k], c1 = p.col[k], r2 = p.row[k + 1], c2 = p.col[k + 1];
            if (r1 == r2) {
                m.set(j, j, Rat(1));
            } else if (c1 == c2) {
                m.set(j, j, Rat(-1));
            } else {
                long dist = (long)(c2 - r2) - (long)(c1 - r1);   // axial distance
                std::vector<int> swapped = p.row;
                std::swap(swapped[k], swapped[k + 1]);
                int j2 = index.at(swapped);
                m.set(j, j, rat(1, dist));
                if (dist < 0)
                    m.set(j2, j, Rat(1));
                else
                    m.set(j2, j, Rat(1) - rat(1, dist * dist));
            }
        }
        rep.gens.push_back(std::move(m));
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(lambda, std::move(rep)).first->second;
}

RationalMatrix pieri_inclusion(const Partition& nu_prime, const Partition& nu) {
    if (nu_prime.size() + 1 != nu.size() || !contains(nu_prime, nu))
        throw std::invalid_argument("pieri_inclusion: shapes must differ by one box");
    int offset = 0;
    for (int r : removable_corners(nu)) {
        std::vector<int> parts = nu.parts();
        parts[r] -= 1;
        Partition sub((std::vector<int>(parts)));
        if (sub == nu_prime) {
            int dsub = (int)irrep_dimension(sub);
            RationalMatrix inc((int)irrep_dimension(nu), dsub);
            for (int j = 0; j < dsub; ++j) inc.set(offset + j, j, Rat(1));
            return inc;
        }
        offset += (int)irrep_dimension(sub);
    }
    throw std::logic_error("pieri_inclusion: corner not found");
}

std::vector<Rat> SkewModule::express(const RationalMatrix& f) const {
    SparseVec flat;
    for (int j = 0; j < f.cols(); ++j)
        for (const auto& [i, v] : f.column(j)) flat.emplace_back(i * f.cols() + j, v);
    std::sort(flat.begin(), flat.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return coords.coefficients(flat);
}

SkewModule skew_module(const Partition& lambda, const Partition& alpha) {
    int n = lambda.size(), a = alpha.size();
    if (a > n) throw std::invalid_argument("skew_module: |alpha| > |lambda|");
    SkewModule sk;
    sk.lambda = lambda;
    sk.alpha = alpha;
    sk.letters = n - a;
    MatrixRep rl = seminormal(lambda);
    MatrixRep ra = seminormal(alpha);
    sk.lambda_dim = rl.dim;
    sk.alpha_dim = ra.dim;
    sk.coords = EchelonBasis(rl.dim * ra.dim);
    sk.rep.degree = n - a;
    if (!contains(alpha, lambda)) {
        sk.rep.dim = 0;
        for (int i = 0; i + 1 < n - a; ++i) sk.rep.gens.emplace_back(0, 0);
        return sk;
    }
    // intertwiner condition: G_i F = F A_i for the generators of S_a embedded
    // on the last a letters (global s_{n-a+i} <-> internal s_i)
    int unknowns = rl.dim * ra.dim;
    RationalMatrix constraints(std::max(1, (a - 1)) * unknowns, unknowns);
    int row0 = 0;
    for (int i = 1; i < a; ++i) {
        const RationalMatrix& g = rl.gens[n - a + i - 1];
        const RationalMatrix& h = ra.gens[i - 1];
        // (G F - F A)_{p,q} = sum_r G_{p,r} F_{r,q} - sum_r F_{p,r} A_{r,q}
        for (int q = 0; q < ra.dim; ++q)
            for (int r = 0; r < rl.dim; ++r)
                for (const auto& [p, v] : g.column(r)) {
                    int cons = row0 + p * ra.dim + q;
                    int unk = r * ra.dim + q;
                    constraints.set(cons, unk, constraints.get(cons, unk) + v);
                }
        for (int q = 0; q < ra.dim; ++q)
            for (const auto& [r, v] : h.column(q))
                for (int p = 0; p < rl.dim; ++p) {
                    int cons = row0 + p * ra.dim + q;
                    int unk = p * ra.dim + r;
                    constraints.set(cons, unk, constraints.get(cons, unk) - v);
                }
        row0 += unknowns;
    }
    std::vector<SparseVec> kernel = kernel_basis(constraints);
    for (auto& v : kernel) sk.coords.insert(v);
    sk.intertwiners = sk.coords.vectors();
    sk.rep.dim = (int)sk.intertwiners.size();
    // postcomposition action of the first n-a letters
    for (int i = 1; i < n - a; ++i) {
        const RationalMatrix& g = rl.gens[i - 1];
        RationalMatrix m(sk.rep.dim, sk.rep.dim);
        for (int j = 0; j < sk.rep.dim; ++j) {
            // flatten(G * F_j)
            SparseVec out;
            for (const auto& [idx, v] : sk.intertwiners[j]) {
                int r = idx / ra.dim, q = idx % ra.dim;
                for (const auto& [p, gv] : g.column(r)) out.emplace_back(p * ra.dim + q, gv * v);
            }
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            SparseVec merged;
            for (auto& e : out) {
                if (!merged.empty() && merged.back().first == e.first)
                    merged.back().second += e.second;
                else
                    merged.push_back(e);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& e) { return e.second == 0; }),
                         merged.end());
            std::vector<Rat> coeff = sk.coords.coefficients(merged);
            for (int i2 = 0; i2 < sk.rep.dim; ++i2)
                if (coeff[i2] != 0) m.set(i2, j, coeff[i2]);
        }
        sk.rep.gens.push_back(std::move(m));
    }
    return sk;
}

namespace {

// unique (up to scalar) S_{a-1}-equivariant surjection S^alpha| -> S^beta,
// where S_{a-1} < S_a fixes the first letter (generators s_2..s_{a-1})
RationalMatrix pieri_transpose(const Partition& alpha, const Partition& beta) {
    MatrixRep ra = seminormal(alpha);
    MatrixRep rb = seminormal(beta);
    int a = alpha.size();
    int unknowns = rb.dim * ra.dim;   // P : dim(beta) x dim(alpha)
    RationalMatrix constraints(std::max(1, a - 2) * unknowns, unknowns);
    int row0 = 0;
    for (int i = 2; i < a; ++i) {
        const RationalMatrix& g = ra.gens[i - 1];        // internal s_i on alpha
        const RationalMatrix& h = rb.gens[i - 2];        // s_{i-1} on beta
        // (P A - B P)_{p,q} over unknown P
        for (int q = 0; q < ra.dim; ++q)
            for (const auto& [r, v] : g.column(q))
                for (int p = 0; p < rb.dim; ++p) {
                    int cons = row0 + p * ra.dim + q;
                    int unk = p * ra.dim + r;
                    constraints.set(cons, unk, constraints.get(cons, unk) + v);
                }
        for (int q = 0; q < ra.dim; ++q)
            for (int r = 0; r < rb.dim; ++r)
                for (const auto& [p, v] : h.column(r)) {
                    int cons = row0 + p * ra.dim + q;
                    int unk = r * ra.dim + q;
                    constraints.set(cons, unk, constraints.get(cons, unk) - v);
                }
        row0 += unknowns;
    }
    std::vector<SparseVec> kernel = kernel_basis(constraints);
    if (kernel.size() != 1)
        throw std::logic_error("pieri_transpose: expected a one-dimensional space, got " +
                               std::to_string(kernel.size()));
    RationalMatrix p(rb.dim, ra.dim);
    for (const auto& [idx, v] : kernel[0]) p.set(idx / ra.dim, idx % ra.dim, v);
    return p;
}

void normalize_first_entry(RationalMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.get(i, j);
            if (v != 0) {
                m = m.scaled(Rat(1) / v);
                return;
            }
        }
}

} // namespace

RationalMatrix skew_surjection(const SkewModule& dom, const SkewModule& tgt) {
    const Partition& lambda = dom.lambda;
    const Partition& beta = dom.alpha;
    const Partition& alpha = tgt.alpha;
    if (!(tgt.lambda == lambda) || beta.size() + 1 != alpha.size() || !contains(beta, alpha) ||
        !contains(alpha, lambda))
        throw std::invalid_argument("skew_surjection: need beta < alpha < lambda, |beta|=|alpha|-1");
    int n = lambda.size(), a = alpha.size();
    MatrixRep rl = seminormal(lambda);
    MatrixRep ra = seminormal(alpha);
    if (tgt.rep.dim == 0 || dom.rep.dim == 0)
        return RationalMatrix(tgt.rep.dim, dom.rep.dim);
    RationalMatrix p = pieri_transpose(alpha, beta);
    // coset representatives of S_a / stab(first letter): internal (1 i)
    std::vector<RationalMatrix> left, right;
    for (int i = 1; i <= a; ++i) {
        Perm global = perm_identity(n);
        Perm internal = perm_identity(a);
        if (i > 1) {
            std::swap(global[n - a], global[n - a + i - 1]);
            std::swap(internal[0], internal[i - 1]);
        }
        left.push_back(rl.action_of(global));
        right.push_back(ra.action_of(internal));   // sigma_i is an involution
    }
    RationalMatrix out(tgt.rep.dim, dom.rep.dim);
    for (int j = 0; j < dom.rep.dim; ++j) {
        RationalMatrix f(dom.lambda_dim, dom.alpha_dim);
        for (const auto& [idx, v] : dom.intertwiners[j])
            f.set(idx / dom.alpha_dim, idx % dom.alpha_dim, v);
        RationalMatrix g(rl.dim, ra.dim);
        for (int i = 0; i < a; ++i) {
            RationalMatrix term = left[i].multiply(f).multiply(p).multiply(right[i]);
            for (int c = 0; c < term.cols(); ++c)
                for (const auto& [r, v] : term.column(c)) g.set(r, c, g.get(r, c) + v);
        }
        std::vector<Rat> coeff = tgt.express(g);
        for (int i2 = 0; i2 < tgt.rep.dim; ++i2)
            if (coeff[i2] != 0) out.set(i2, j, coeff[i2]);
    }
    normalize_first_entry(out);
    return out;
}

RationalMatrix skew_surjection(const Partition& lambda, const Partition& beta,
                               const Partition& alpha) {
    SkewModule dom = skew_module(lambda, beta);
    SkewModule tgt = skew_module(lambda, alpha);
    return skew_surjection(dom, tgt);
}

Invariants s2_invariants(const MatrixRep& r, const RationalMatrix& involution, int acting_gens) {
    if (!(involution.multiply(involution) == RationalMatrix::identity(r.dim)))
        throw std::invalid_argument("s2_invariants: involution does not square to identity");
    for (int i = 0; i < acting_gens; ++i)
        if (!(involution.multiply(r.gens[i]) == r.gens[i].multiply(involution)))
            throw std::invalid_argument("s2_invariants: auxiliary action does not commute");
    // fixed space = kernel of (J - I)
    RationalMatrix ji = involution;
    for (int k = 0; k < r.dim; ++k) ji.set(k, k, ji.get(k, k) - 1);
    std::vector<SparseVec> kernel = kernel_basis(ji);
    EchelonBasis coords(r.dim);
    for (auto& v : kernel) coords.insert(v);
    Invariants inv;
    inv.rep.degree = acting_gens + 1;
    inv.rep.dim = coords.rank();
    inv.inclusion = RationalMatrix(r.dim, coords.rank());
    for (int j = 0; j < coords.rank(); ++j)
        for (const auto& [i, v] : coords.vectors()[j]) inv.inclusion.set(i, j, v);
    for (int g = 0; g < acting_gens; ++g) {
        RationalMatrix m(inv.rep.dim, inv.rep.dim);
        for (int j = 0; j < inv.rep.dim; ++j) {
            SparseVec img = r.gens[g].apply(coords.vectors()[j]);
            std::vector<Rat> coeff = coords.coefficients(img);
            for (int i2 = 0; i2 < inv.rep.dim; ++i2)
                if (coeff[i2] != 0) m.set(i2, j, coeff[i2]);
        }
        inv.rep.gens.push_back(std::move(m));
    }
    return inv;
}

namespace {

// coset representative c_i of S_n / S_{n-1}: the cycle sending letter n to
// position i (0-based i), identity for i = n-1.
Perm coset_rep(int n, int i) {
    Perm p(n);
    for (int j = 0; j < i; ++j) p[j] = j;
    for (int j = i; j + 1 < n; ++j) p[j] = j + 1;
    p[n - 1] = i;
    return p;
}

} // namespace

MatrixRep induce_matrix(const MatrixRep& r) {
    int n = r.degree + 1;
    MatrixRep ind;
    ind.degree = n;
    ind.dim = n * r.dim;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < r.dim; ++k)
            ind.basis_labels.push_back("c" + std::to_string(i + 1) + "*" +
                                       (k < (int)r.basis_labels.size() ? r.basis_labels[k]
                                                                       : std::to_string(k)));
    for (int g = 0; g + 1 < n; ++g) {
        Perm sg = perm_identity(n);
        std::swap(sg[g], sg[g + 1]);
        RationalMatrix m(ind.dim, ind.dim);
        for (int i = 0; i < n; ++i) {
            Perm t = perm_compose(sg, coset_rep(n, i));
            int j = t[n - 1];
            Perm h = perm_compose(perm_inverse(coset_rep(n, j)), t);
            if (h[n - 1] != n - 1) throw std::logic_error("induce_matrix: coset bookkeeping");
            h.pop_back();
            RationalMatrix block = r.action_of(h);
            m.insert_block(j * r.dim, i * r.dim, block);
        }
        ind.gens.push_back(std::move(m));
    }
    return ind;
}

RationalMatrix induce_map(const RationalMatrix& f, const MatrixRep& b) {
    int n = b.degree;
    RationalMatrix out(b.dim, n * f.cols());
    for (int i = 0; i < n; ++i) {
        RationalMatrix blk = b.action_of(coset_rep(n, i)).multiply(f);
        out.insert_block(0, i * f.cols(), blk);
    }
    return out;
}

MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b) {
    if (a.degree != b.degree) throw std::invalid_argument("tensor_rep: degree mismatch");
    MatrixRep t;
    t.degree = a.degree;
    t.dim = a.dim * b.dim;
    for (size_t g = 0; g < a.gens.size(); ++g)
        t.gens.push_back(kronecker_product(a.gens[g], b.gens[g]));
    return t;
}

} // namespace beadhom
