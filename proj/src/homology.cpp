#include "beadhom/homology.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

namespace beadhom {

namespace {

// ---------- model: k hom_FI(a,b)^tr ----------
// ambient basis: injections a -> b; S_a acts by precomposition with the
// inverse, S_b by postcomposition. Source: (missing point x, injection on
// the remaining a-1 points listed by increasing domain element).

struct InjKey {
    std::vector<int> v;
    bool operator==(const InjKey&) const = default;
};
struct InjKeyHash {
    std::size_t operator()(const InjKey& k) const {
        std::size_t h = 146527;
        for (int x : k.v) h = h * 31 + (std::size_t)(x + 1);
        return h;
    }
};

struct HfiModel {
    int a, b;
    std::vector<Injection> ambient;
    std::unordered_map<InjKey, int, InjKeyHash> aindex;
    // source: pairs (x, values on the sorted domain)
    std::vector<std::pair<int, std::vector<int>>> source;
    std::unordered_map<InjKey, int, InjKeyHash> sindex;

    static InjKey skey(int x, const std::vector<int>& vals) {
        InjKey k;
        k.v.push_back(x);
        k.v.insert(k.v.end(), vals.begin(), vals.end());
        return k;
    }

    HfiModel(int a_, int b_) : a(a_), b(b_) {
        ambient = enumerate_injections(a, b);
        for (int i = 0; i < (int)ambient.size(); ++i) aindex[InjKey{ambient[i].values}] = i;
        if (a >= 1 && a <= b) {
            std::vector<Injection> small = enumerate_injections(a - 1, b);
            for (int x = 1; x <= a; ++x)
                for (const auto& f : small) {
                    sindex[skey(x, f.values)] = (int)source.size();
                    source.emplace_back(x, f.values);
                }
        }
    }

    std::pair<int, int> ambient_relabel(const Perm& g, int idx) const {
        const auto& f = ambient[idx].values;
        std::vector<int> nf(a);
        for (int u = 0; u < a; ++u) nf[g[u]] = f[u];
        return {aindex.at(InjKey{nf}), 1};
    }
    std::pair<int, int> ambient_post(const Perm& t, int idx) const {
        const auto& f = ambient[idx].values;
        std::vector<int> nf(a);
        for (int u = 0; u < a; ++u) nf[u] = t[f[u] - 1] + 1;
        return {aindex.at(InjKey{nf}), 1};
    }
    std::pair<int, int> source_relabel(const Perm& g, int idx) const {
        const auto& [x, vals] = source[idx];
        std::vector<int> dom;
        for (int u = 1; u <= a; ++u)
            if (u != x) dom.push_back(u);
        int nx = g[x - 1] + 1;
        std::vector<std::pair<int, int>> mapped;
        for (size_t i = 0; i < dom.size(); ++i) mapped.emplace_back(g[dom[i] - 1] + 1, vals[i]);
        std::sort(mapped.begin(), mapped.end());
        std::vector<int> nvals;
        for (auto& [u, v] : mapped) nvals.push_back(v);
        return {sindex.at(skey(nx, nvals)), 1};
    }
    std::pair<int, int> source_post(const Perm& t, int idx) const {
        const auto& [x, vals] = source[idx];
        std::vector<int> nvals(vals.size());
        for (size_t i = 0; i < vals.size(); ++i) nvals[i] = t[vals[i] - 1] + 1;
        return {sindex.at(skey(x, nvals)), 1};
    }

    RationalMatrix structure_map() const {
        RationalMatrix m((int)ambient.size(), (int)source.size());
        for (int j = 0; j < (int)source.size(); ++j) {
            const auto& [x, vals] = source[j];
            std::vector<char> used(b + 1, 0);
            for (int v : vals) used[v] = 1;
            std::vector<int> dom;
            for (int u = 1; u <= a; ++u)
                if (u != x) dom.push_back(u);
            for (int v = 1; v <= b; ++v) {
                if (used[v]) continue;
                std::vector<int> full(a);
                for (size_t i = 0; i < dom.size(); ++i) full[dom[i] - 1] = vals[i];
                full[x - 1] = v;
                m.set(aindex.at(InjKey{full}), j, Rat(1));
            }
        }
        return m;
    }
};

// ---------- models: k Beads and Beads^{+-} ----------

struct BeadsModel {
    int N, n;
    bool signed_quotient;
    BeadBasis ambient;
    std::vector<BeadBasis> src_basis;   // per missing label x = 1..N
    std::vector<int> src_offset;

    BeadsModel(int N_, int n_, bool sgn) : N(N_), n(n_), signed_quotient(sgn) {
        std::vector<BeadArrangement> elems = enumerate_beads(N, n);
        if (sgn) elems = keep_canonical(std::move(elems));
        ambient = BeadBasis::build(std::move(elems));
        src_basis.resize(N + 1);
        src_offset.assign(N + 2, 0);
        for (int x = 1; x <= N; ++x) {
            std::vector<int> labels;
            for (int u = 1; u <= N; ++u)
                if (u != x) labels.push_back(u);
            std::vector<BeadArrangement> e = enumerate_beads(labels, n);
            if (sgn) e = keep_canonical(std::move(e));
            src_basis[x] = BeadBasis::build(std::move(e));
            src_offset[x + 1] = src_offset[x] + src_basis[x].dim();
        }
    }

    static std::vector<BeadArrangement> keep_canonical(std::vector<BeadArrangement> elems) {
        std::vector<BeadArrangement> canon;
        for (auto& e : elems) {
            bool ok = true;
            for (int c = 0; c < e.columns(); ++c)
                if (e.top[c] && e.bottom[c] > e.top[c]) ok = false;
            if (ok) canon.push_back(std::move(e));
        }
        return canon;
    }

    int dim() const { return ambient.dim(); }
    int source_dim() const { return src_offset[N + 1]; }

    std::pair<int, int> relabel_arrangement(const BeadBasis& basis, BeadArrangement b,
                                            const Perm& g) const {
        int sign = 1;
        for (int c = 0; c < b.columns(); ++c) {
            b.bottom[c] = g[b.bottom[c] - 1] + 1;
            if (b.top[c]) {
                b.top[c] = g[b.top[c] - 1] + 1;
                if (signed_quotient && b.bottom[c] > b.top[c]) {
                    std::swap(b.bottom[c], b.top[c]);
                    sign = -sign;
                }
            }
        }
        return {basis.index.at(b), sign};
    }

    std::pair<int, int> ambient_relabel(const Perm& g, int idx) const {
        return relabel_arrangement(ambient, ambient.elems[idx], g);
    }
    std::pair<int, int> ambient_columns(const Perm& h, int idx) const {
        const BeadArrangement& b = ambient.elems[idx];
        BeadArrangement c;
        c.bottom.assign(n, 0);
        c.top.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            c.bottom[h[i]] = b.bottom[i];
            c.top[h[i]] = b.top[i];
        }
        return {ambient.index.at(c), 1};
    }
    int source_owner(int idx) const {
        int x = 1;
        while (src_offset[x + 1] <= idx) ++x;
        return x;
    }
    std::pair<int, int> source_relabel(const Perm& g, int idx) const {
        int x = source_owner(idx);
        int nx = g[x - 1] + 1;
        auto [local, sign] =
            relabel_arrangement(src_basis[nx], src_basis[x].elems[idx - src_offset[x]], g);
        return {src_offset[nx] + local, sign};
    }
    std::pair<int, int> source_columns(const Perm& h, int idx) const {
        int x = source_owner(idx);
        const BeadArrangement& b = src_basis[x].elems[idx - src_offset[x]];
        BeadArrangement c;
        c.bottom.assign(n, 0);
        c.top.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            c.bottom[h[i]] = b.bottom[i];
            c.top[h[i]] = b.top[i];
        }
        return {src_offset[x] + src_basis[x].index.at(c), 1};
    }

    RationalMatrix structure_map() const {
        RationalMatrix m(dim(), source_dim());
        for (int x = 1; x <= N; ++x)
            for (int j = 0; j < src_basis[x].dim(); ++j) {
                const BeadArrangement& phi = src_basis[x].elems[j];
                for (int c = 0; c < phi.columns(); ++c) {
                    if (phi.top[c]) continue;
                    BeadArrangement psi = phi;
                    psi.top[c] = x;
                    int sign = 1;
                    if (signed_quotient && psi.bottom[c] > psi.top[c]) {
                        std::swap(psi.bottom[c], psi.top[c]);
                        sign = -sign;
                    }
                    int row = ambient.index.at(psi);
                    int col = src_offset[x] + j;
                    m.set(row, col, m.get(row, col) + sign);
                }
            }
        return m;
    }

    std::vector<int> ambient_orbits() const {
        // S_N relabelling preserves exactly the doubled-column mask
        std::vector<int> reps;
        std::map<std::vector<int>, int> seen;
        for (int i = 0; i < dim(); ++i) {
            std::vector<int> mask(n);
            for (int c = 0; c < n; ++c) mask[c] = ambient.elems[i].top[c] ? 1 : 0;
            if (seen.emplace(mask, i).second) reps.push_back(i);
        }
        return reps;
    }
    std::vector<int> source_orbits() const {
        // transitive on the missing label, then by mask
        std::vector<int> reps;
        std::map<std::vector<int>, int> seen;
        int x = 1;
        for (int j = 0; j < src_basis[x].dim(); ++j) {
            std::vector<int> mask(n);
            for (int c = 0; c < n; ++c) mask[c] = src_basis[x].elems[j].top[c] ? 1 : 0;
            if (seen.emplace(mask, j).second) reps.push_back(src_offset[x] + j);
        }
        return reps;
    }
};

} // namespace

H0Problem build_h0_problem(int N, int n, H0Model model) {
    H0Problem p;
    p.N = N;
    p.n = n;
    if (model == H0Model::hfi_tr) {
        auto m = std::make_shared<HfiModel>(N, n);
        p.ambient_dim = (int)m->ambient.size();
        p.source_dim = (int)m->source.size();
        p.incoming = m->structure_map();
        p.relabel_one = [m](const Perm& g, int i) { return m->ambient_relabel(g, i); };
        p.columns_one = [m](const Perm& t, int i) { return m->ambient_post(t, i); };
        p.src_relabel_one = [m](const Perm& g, int i) { return m->source_relabel(g, i); };
        p.src_columns_one = [m](const Perm& t, int i) { return m->source_post(t, i); };
        std::map<std::vector<int>, int> seen;
        for (int i = 0; i < p.ambient_dim; ++i) {
            std::vector<int> img = m->ambient[i].values;
            std::sort(img.begin(), img.end());
            if (seen.emplace(img, i).second) p.orbit_reps.push_back(i);
        }
        std::map<std::vector<int>, int> sseen;
        for (int i = 0; i < p.source_dim; ++i) {
            std::vector<int> img = m->source[i].second;
            std::sort(img.begin(), img.end());
            if (sseen.emplace(img, i).second) p.src_orbit_reps.push_back(i);
        }
        return p;
    }
    auto m = std::make_shared<BeadsModel>(N, n, model == H0Model::beads_signed);
    p.ambient_dim = m->dim();
    p.source_dim = m->source_dim();
    p.incoming = m->structure_map();
    p.relabel_one = [m](const Perm& g, int i) { return m->ambient_relabel(g, i); };
    p.columns_one = [m](const Perm& h, int i) { return m->ambient_columns(h, i); };
    p.src_relabel_one = [m](const Perm& g, int i) { return m->source_relabel(g, i); };
    p.src_columns_one = [m](const Perm& h, int i) { return m->source_columns(h, i); };
    p.orbit_reps = m->ambient_orbits();
    p.src_orbit_reps = m->source_orbits();
    return p;
}

SignedPerm signed_perm_of(const PointAction& act, const Perm& g, int dim) {
    SignedPerm sp;
    sp.img.resize(dim);
    sp.sign.resize(dim);
    for (int i = 0; i < dim; ++i) {
        auto [j, s] = act(g, i);
        sp.img[i] = j;
        sp.sign[i] = s;
    }
    return sp;
}

namespace {

SignedPerm compose_signed(const SignedPerm& outer, const SignedPerm& inner) {
    SignedPerm c;
    int d = inner.dim();
    c.img.resize(d);
    c.sign.resize(d);
    for (int i = 0; i < d; ++i) {
        c.img[i] = outer.img[inner.img[i]];
        c.sign[i] = inner.sign[i] * outer.sign[inner.img[i]];
    }
    return c;
}

} // namespace

void check_equivariance(const H0Problem& p) {
    auto check_group = [&](int degree, const PointAction& amb_act, const PointAction& src_act,
                           const char* what) {
        for (int g = 0; g + 1 < degree; ++g) {
            Perm s = perm_identity(degree);
            std::swap(s[g], s[g + 1]);
            SignedPerm amb = signed_perm_of(amb_act, s, p.ambient_dim);
            SignedPerm src = signed_perm_of(src_act, s, p.source_dim);
            for (int j = 0; j < p.source_dim; ++j) {
                SparseVec lhs = amb.apply(p.incoming.column(j));
                SparseVec rhs = p.incoming.apply(src.apply({{j, Rat(1)}}));
                if (lhs != rhs) throw std::logic_error(what);
            }
        }
    };
    check_group(p.N, p.relabel_one, p.src_relabel_one, "h0: structure map not S_N-equivariant");
    check_group(p.n, p.columns_one, p.src_columns_one, "h0: structure map not S_n-equivariant");
}

H0Value h0_cokernel(const H0Problem& p) {
    check_equivariance(p);
    EchelonBasis img = image_basis(p.incoming);
    H0Value out;
    out.dim = p.ambient_dim - img.rank();
    out.table = BiClassFunction(p.N, p.n);
    const CharTable& tN = character_table(p.N);
    const CharTable& tn = character_table(p.n);
    for (size_t c1 = 0; c1 < tN.parts.size(); ++c1) {
        SignedPerm a =
            signed_perm_of(p.relabel_one, class_representative(tN.parts[c1], p.N), p.ambient_dim);
        for (size_t c2 = 0; c2 < tn.parts.size(); ++c2) {
            SignedPerm b =
                signed_perm_of(p.columns_one, class_representative(tn.parts[c2], p.n), p.ambient_dim);
            out.table.values[c1][c2] = quotient_trace(compose_signed(b, a), img);
        }
    }
    return out;
}

RationalMatrix central_projector(const Partition& rho, const PointAction& act, int N, int dim) {
    const CharTable& t = character_table(N);
    int ri = t.index(rho);
    RationalMatrix m(dim, dim);
    for (const Perm& g : all_permutations(N)) {
        long chi = (long)t.chi[ri][t.index(cycle_type(g))];   // classes are self-inverse
        if (chi == 0) continue;
        for (int i = 0; i < dim; ++i) {
            auto [j, s] = act(g, i);
            m.set(j, i, m.get(j, i) + Rat(chi * s));
        }
    }
    Rat scale = Rat((long)irrep_dimension(rho)) / Rat(mpz_class(t.factorial));
    return m.scaled(scale);
}

IsotypicalSlice isotypical_slice(const H0Problem& p, const Partition& rho) {
    RationalMatrix proj = central_projector(rho, p.relabel_one, p.N, p.ambient_dim);
    IsotypicalSlice s{EchelonBasis(p.ambient_dim), EchelonBasis(p.ambient_dim)};
    for (int j = 0; j < p.ambient_dim; ++j) s.ambient_slice.insert(proj.column(j));
    for (int j = 0; j < p.source_dim; ++j) s.image_slice.insert(proj.apply(p.incoming.column(j)));
    return s;
}

namespace {

// BFS table of the whole group together with the translates R(h) x0 of a
// cyclic vector of the seminormal model.
struct GroupTable {
    std::vector<Perm> elems;
    std::vector<std::vector<Rat>> z;   // z[h] = R(h) x0
};

GroupTable group_table(const Partition& rho, int N) {
    MatrixRep r = seminormal(rho);
    GroupTable t;
    std::map<Perm, int> index;
    std::vector<Rat> x0(std::max(r.dim, 1), Rat(0));
    x0[0] = 1;
    t.elems.push_back(perm_identity(N));
    t.z.push_back(x0);
    index[t.elems[0]] = 0;
    for (size_t head = 0; head < t.elems.size(); ++head) {
        Perm g = t.elems[head];
        for (int i = 0; i + 1 < N; ++i) {
            Perm s = perm_identity(N);
            std::swap(s[i], s[i + 1]);
            Perm g2 = perm_compose(s, g);
            if (index.count(g2)) continue;
            std::vector<Rat> z2(r.dim, Rat(0));
            const RationalMatrix& gen = r.gens[i];
            for (int col = 0; col < r.dim; ++col) {
                if (t.z[head][col] == 0) continue;
                for (const auto& [row, v] : gen.column(col)) z2[row] += v * t.z[head][col];
            }
            index[g2] = (int)t.elems.size();
            t.elems.push_back(std::move(g2));
            t.z.push_back(std::move(z2));
        }
    }
    return t;
}

// Evaluated Hom-space: span{ f(x0) : f in Hom_{S_N}(S^rho, V) } inside V,
// built orbit by orbit from the full-group averages.
EchelonBasis hom_evaluation_space(const GroupTable& gt, const PointAction& act, int dim,
                                  const std::vector<int>& orbit_reps, long expected_rank) {
    int d = (int)gt.z[0].size();
    EchelonBasis basis(dim);
    for (int rep : orbit_reps) {
        if (basis.rank() == expected_rank) break;
        std::vector<std::map<int, Rat>> acc(d);
        for (size_t h = 0; h < gt.elems.size(); ++h) {
            auto [idx, sgn] = act(perm_inverse(gt.elems[h]), rep);
            for (int k = 0; k < d; ++k) {
                const Rat& c = gt.z[h][k];
                if (c == 0) continue;
                Rat& slot = acc[k][idx];
                if (sgn > 0)
                    slot += c;
                else
                    slot -= c;
            }
        }
        for (int k = 0; k < d; ++k) {
            SparseVec v;
            for (auto& [i, val] : acc[k])
                if (val != 0) v.emplace_back(i, val);
            basis.insert(v);
        }
    }
    return basis;
}

long multiplicity_in(const Partition& rho, const PointAction& act, int dim, int N) {
    const CharTable& t = character_table(N);
    int ri = t.index(rho);
    Rat acc(0);
    for (size_t c = 0; c < t.parts.size(); ++c) {
        Perm g = class_representative(t.parts[c], N);
        long tr = 0;
        for (int i = 0; i < dim; ++i) {
            auto [j, s] = act(g, i);
            if (j == i) tr += s;
        }
        acc += Rat(mpz_class(t.class_size[c])) * Rat(tr) * Rat((long)t.chi[ri][c]);
    }
    acc /= Rat(mpz_class(t.factorial));
    if (acc.get_den() != 1) throw std::logic_error("multiplicity_in: non-integral multiplicity");
    return (long)acc.get_num().get_si();
}

} // namespace

Decomposition h0_slice(const H0Problem& p, const Partition& rho) {
    Decomposition out;
    out.n = p.n;
    if (p.ambient_dim == 0) return out;
    long amb_mult = multiplicity_in(rho, p.relabel_one, p.ambient_dim, p.N);
    if (amb_mult == 0) return out;
    GroupTable gt = group_table(rho, p.N);
    EchelonBasis wv = hom_evaluation_space(gt, p.relabel_one, p.ambient_dim, p.orbit_reps, amb_mult);
    if (wv.rank() != amb_mult) throw std::logic_error("h0_slice: ambient Hom-space rank mismatch");
    EchelonBasis img(p.ambient_dim);
    if (p.source_dim > 0) {
        long src_mult = multiplicity_in(rho, p.src_relabel_one, p.source_dim, p.N);
        EchelonBasis ws =
            hom_evaluation_space(gt, p.src_relabel_one, p.source_dim, p.src_orbit_reps, src_mult);
        if (ws.rank() != src_mult) throw std::logic_error("h0_slice: source Hom-space rank mismatch");
        for (const auto& w : ws.vectors()) img.insert(p.incoming.apply(w));
    }
    const CharTable& tn = character_table(p.n);
    ClassFunction chi(p.n, std::vector<Rat>(tn.parts.size(), Rat(0)));
    for (size_t c = 0; c < tn.parts.size(); ++c) {
        SignedPerm h =
            signed_perm_of(p.columns_one, class_representative(tn.parts[c], p.n), p.ambient_dim);
        chi[(int)c] = restricted_trace(h, wv) - restricted_trace(h, img);
    }
    return decompose(chi);
}

BiDecomposition decompose_h0(int N, int n, H0Model model, int max_N) {
    if (N > max_N) throw std::invalid_argument("decompose_h0: size cap exceeded");
    BiDecomposition out;
    out.N = N;
    out.n = n;
    if (model == H0Model::hfi_tr) {
        if (N > n) return out;
        if (N == 0) {
            // no one-point-smaller sources: the value is k hom_FI(0,n) = k
            out.add(Partition{}, Partition{n}, 1);
            return out;
        }
        H0Problem p = build_h0_problem(N, n, model);
        H0Value v = h0_cokernel(p);
        return decompose_bi(v.table);
    }
    if (n > N || N > 2 * n) return out;
    if (N == 0) {
        out.add(Partition{}, Partition{}, 1);
        return out;
    }
    H0Problem p = build_h0_problem(N, n, model);
    check_equivariance(p);
    for (const Partition& rho : partitions_of(N)) {
        Decomposition slice = h0_slice(p, rho);
        for (const auto& [gamma, m] : slice.mult) out.add(rho, gamma, m);
    }
    return out;
}

} // namespace beadhom
