#include "beadhom/beads.hpp"

#include <algorithm>
#include <stdexcept>

namespace beadhom {

std::vector<Injection> enumerate_injections(int a, int b) {
    std::vector<Injection> out;
    if (a < 0 || b < 0 || a > b) return out;
    Injection cur;
    cur.a = a;
    cur.b = b;
    std::vector<char> used(b + 1, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == a) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= b; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            cur.values.push_back(v);
            self(self, k + 1);
            cur.values.pop_back();
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

int BeadArrangement::beads() const {
    int c = 0;
    for (int t : top)
        if (t) ++c;
    return columns() + c;
}

std::size_t BeadArrangementHash::operator()(const BeadArrangement& b) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= (std::size_t)(v + 1);
        h *= 1099511628211ull;
    };
    for (int i = 0; i < b.columns(); ++i) {
        mix(b.bottom[i]);
        mix(b.top[i]);
    }
    return h;
}

std::vector<BeadArrangement> enumerate_beads(const std::vector<int>& labels, int n) {
    int N = (int)labels.size();
    std::vector<BeadArrangement> out;
    if (n < 0 || N < n || N > 2 * n) return out;
    int doubled = N - n;
    // choose positions of doubled columns, then assign labels to slots
    std::vector<int> mask(n, 0);
    std::vector<int> perm(labels);
    std::sort(perm.begin(), perm.end());
    std::vector<char> used(N, 0);
    BeadArrangement cur;
    cur.bottom.assign(n, 0);
    cur.top.assign(n, 0);
    auto fill = [&](auto&& self, int col) -> void {
        if (col == n) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < N; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            cur.bottom[col] = perm[i];
            if (!mask[col]) {
                self(self, col + 1);
            } else {
                for (int j = 0; j < N; ++j) {
                    if (used[j]) continue;
                    used[j] = 1;
                    cur.top[col] = perm[j];
                    self(self, col + 1);
                    cur.top[col] = 0;
                    used[j] = 0;
                }
            }
            cur.bottom[col] = 0;
            used[i] = 0;
        }
    };
    auto choose = [&](auto&& self, int col, int left) -> void {
        if (n - col < left) return;
        if (col == n) {
            fill(fill, 0);
            return;
        }
        if (left > 0) {
            mask[col] = 1;
            self(self, col + 1, left - 1);
            mask[col] = 0;
        }
        self(self, col + 1, left);
    };
    choose(choose, 0, doubled);
    return out;
}

std::vector<BeadArrangement> enumerate_beads(int N, int n) {
    std::vector<int> labels(N);
    for (int i = 0; i < N; ++i) labels[i] = i + 1;
    return enumerate_beads(labels, n);
}

BeadBasis BeadBasis::build(std::vector<BeadArrangement> elems) {
    BeadBasis b;
    b.elems = std::move(elems);
    b.index.reserve(b.elems.size() * 2);
    for (int i = 0; i < (int)b.elems.size(); ++i) b.index.emplace(b.elems[i], i);
    return b;
}

RationalMatrix transpose_structure_map(int a, int b) {
    std::vector<Injection> src = enumerate_injections(a, b);
    std::vector<Injection> tgt = enumerate_injections(a + 1, b);
    std::unordered_map<std::size_t, int> lookup;   // not used; linear index below
    (void)lookup;
    // index targets
    auto key = [b](const std::vector<int>& vals) {
        std::size_t k = 0;
        for (int v : vals) k = k * (std::size_t)(b + 1) + (std::size_t)v;
        return k;
    };
    std::unordered_map<std::size_t, int> tindex;
    for (int j = 0; j < (int)tgt.size(); ++j) tindex[key(tgt[j].values)] = j;
    RationalMatrix m((int)tgt.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        std::vector<char> used(b + 1, 0);
        for (int v : src[j].values) used[v] = 1;
        for (int v = 1; v <= b; ++v) {
            if (used[v]) continue;
            std::vector<int> ext = src[j].values;
            ext.push_back(v);
            m.set(tindex.at(key(ext)), j, Rat(1));
        }
    }
    return m;
}

RationalMatrix beads_fi_map(const BeadBasis& source, const BeadBasis& target, int new_label) {
    RationalMatrix m(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) {
        const BeadArrangement& phi = source.elems[j];
        for (int c = 0; c < phi.columns(); ++c) {
            if (phi.top[c]) continue;
            BeadArrangement psi = phi;
            psi.top[c] = new_label;
            auto it = target.index.find(psi);
            if (it == target.index.end()) throw std::logic_error("beads_fi_map: target missing");
            m.set(it->second, j, m.get(it->second, j) + 1);
        }
    }
    return m;
}

RationalMatrix iota_plus_tau(const BeadBasis& source, const BeadBasis& target, int x, int y,
                             int column) {
    RationalMatrix m(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) {
        const BeadArrangement& phi = source.elems[j];
        if (column < 0 || column > phi.columns())
            throw std::invalid_argument("iota_plus_tau: column out of range");
        BeadArrangement psi;
        psi.bottom = phi.bottom;
        psi.top = phi.top;
        psi.bottom.insert(psi.bottom.begin() + column, x);
        psi.top.insert(psi.top.begin() + column, y);
        auto it = target.index.find(psi);
        if (it == target.index.end()) throw std::logic_error("iota_plus_tau: target missing");
        m.set(it->second, j, m.get(it->second, j) + 1);
        std::swap(psi.bottom[column], psi.top[column]);
        it = target.index.find(psi);
        if (it == target.index.end()) throw std::logic_error("iota_plus_tau: target missing");
        m.set(it->second, j, m.get(it->second, j) + 1);
    }
    return m;
}

namespace {

// canonicalize doubled columns to bottom < top; returns the sign
int canonicalize(BeadArrangement& b) {
    int sign = 1;
    for (int c = 0; c < b.columns(); ++c)
        if (b.top[c] && b.bottom[c] > b.top[c]) {
            std::swap(b.bottom[c], b.top[c]);
            sign = -sign;
        }
    return sign;
}

} // namespace

SignedBeads antisymmetrize(int N, int n) {
    SignedBeads sb;
    sb.N = N;
    sb.n = n;
    sb.full = BeadBasis::build(enumerate_beads(N, n));
    std::vector<BeadArrangement> canon;
    for (const auto& b : sb.full.elems) {
        bool ok = true;
        for (int c = 0; c < b.columns(); ++c)
            if (b.top[c] && b.bottom[c] > b.top[c]) ok = false;
        if (ok) canon.push_back(b);
    }
    sb.canonical = BeadBasis::build(std::move(canon));
    sb.project = RationalMatrix(sb.canonical.dim(), sb.full.dim());
    for (int j = 0; j < sb.full.dim(); ++j) {
        BeadArrangement b = sb.full.elems[j];
        int sign = canonicalize(b);
        sb.project.set(sb.canonical.index.at(b), j, Rat(sign));
    }
    return sb;
}

namespace {

SignedPerm relabel_action_impl(const BeadBasis& basis, const Perm& g, bool signed_quotient) {
    SignedPerm sp;
    sp.img.resize(basis.dim());
    sp.sign.assign(basis.dim(), 1);
    for (int j = 0; j < basis.dim(); ++j) {
        BeadArrangement b = basis.elems[j];
        for (int c = 0; c < b.columns(); ++c) {
            b.bottom[c] = g[b.bottom[c] - 1] + 1;
            if (b.top[c]) b.top[c] = g[b.top[c] - 1] + 1;
        }
        int sign = signed_quotient ? canonicalize(b) : 1;
        sp.img[j] = basis.index.at(b);
        sp.sign[j] = sign;
    }
    return sp;
}

SignedPerm column_action_impl(const BeadBasis& basis, const Perm& h) {
    SignedPerm sp;
    sp.img.resize(basis.dim());
    sp.sign.assign(basis.dim(), 1);
    for (int j = 0; j < basis.dim(); ++j) {
        const BeadArrangement& b = basis.elems[j];
        BeadArrangement c;
        c.bottom.assign(b.columns(), 0);
        c.top.assign(b.columns(), 0);
        for (int i = 0; i < b.columns(); ++i) {
            c.bottom[h[i]] = b.bottom[i];
            c.top[h[i]] = b.top[i];
        }
        sp.img[j] = basis.index.at(c);
    }
    return sp;
}

} // namespace

SignedPerm SignedBeads::relabel_action(const Perm& g) const {
    return relabel_action_impl(canonical, g, true);
}

SignedPerm SignedBeads::column_action(const Perm& h) const {
    return column_action_impl(canonical, h);
}

SignedPerm beads_relabel_action(const BeadBasis& basis, const Perm& g) {
    return relabel_action_impl(basis, g, false);
}

SignedPerm beads_column_action(const BeadBasis& basis, const Perm& h) {
    return column_action_impl(basis, h);
}

std::uint64_t beads_count(int N, int n) {
    if (n < 0 || N < n || N > 2 * n) return 0;
    std::uint64_t binom = 1;
    int k = N - n;
    for (int i = 1; i <= k; ++i) binom = binom * (std::uint64_t)(n - k + i) / (std::uint64_t)i;
    std::uint64_t fact = 1;
    for (int i = 2; i <= N; ++i) fact *= (std::uint64_t)i;
    return binom * fact;
}

std::uint64_t signed_beads_dim(int N, int n) {
    std::uint64_t c = beads_count(N, n);
    for (int i = 0; i < N - n; ++i) c /= 2;
    return c;
}

} // namespace beadhom
