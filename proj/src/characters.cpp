#include "beadhom/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace beadhom {

namespace {

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= (std::uint64_t)k;
    return f;
}

std::uint64_t centralizer_order(const Partition& mu) {
    // z_mu = prod_i i^{m_i} m_i!
    std::map<int, int> mult;
    for (int v : mu.parts()) ++mult[v];
    std::uint64_t z = 1;
    for (auto [v, m] : mult) {
        for (int i = 0; i < m; ++i) z *= (std::uint64_t)v;
        z *= factorial_u64(m);
    }
    return z;
}

// beta-set of lambda padded to length L (distinct first-column hook lengths)
std::vector<int> beta_set(const Partition& lambda, int L) {
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda.part(i) + (L - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int L = (int)beta.size();
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        int p = beta[i] - (L - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

// chi^lambda evaluated on cycle type mu via Murnaghan-Nakayama
long long mn_value(const Partition& lambda, const Partition& mu,
                   std::map<std::pair<Partition, Partition>, long long>& memo) {
    if (lambda.size() == 0) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu.part(0);
    Partition mu_rest = hat(mu);
    int L = lambda.length();
    std::vector<int> beta = beta_set(lambda, L);
    std::vector<char> in_beta(lambda.size() + L + 1, 0);
    for (int b : beta) in_beta[b] = 1;

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[i];
        if (b < r || in_beta[b - r]) continue;
        int height = 0;
        for (int c = b - r + 1; c < b; ++c)
            if (in_beta[c]) ++height;
        std::vector<int> nb = beta;
        nb[i] = b - r;
        long long sub = mn_value(from_beta(std::move(nb)), mu_rest, memo);
        total += (height % 2 ? -sub : sub);
    }
    memo[key] = total;
    return total;
}

std::mutex g_table_mutex;
std::map<int, CharTable> g_tables;

} // namespace

int CharTable::index(const Partition& p) const {
    for (int i = 0; i < (int)parts.size(); ++i)
        if (parts[i] == p) return i;
    throw std::invalid_argument("CharTable::index: partition of wrong size");
}

const CharTable& character_table(int n) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return it->second;

    CharTable t;
    t.n = n;
    t.parts = partitions_of(n);
    t.factorial = factorial_u64(n);
    t.class_size.resize(t.parts.size());
    for (size_t c = 0; c < t.parts.size(); ++c)
        t.class_size[c] = t.factorial / centralizer_order(t.parts[c]);
    std::map<std::pair<Partition, Partition>, long long> memo;
    t.chi.assign(t.parts.size(), std::vector<long long>(t.parts.size(), 0));
    for (size_t l = 0; l < t.parts.size(); ++l)
        for (size_t c = 0; c < t.parts.size(); ++c)
            t.chi[l][c] = mn_value(t.parts[l], t.parts[c], memo);
    return g_tables.emplace(n, std::move(t)).first->second;
}

void Decomposition::add(const Partition& lambda, long m) {
    if (m == 0) return;
    long& v = mult[lambda];
    v += m;
    if (v == 0) mult.erase(lambda);
}

long Decomposition::operator[](const Partition& lambda) const {
    auto it = mult.find(lambda);
    return it == mult.end() ? 0 : it->second;
}

long Decomposition::total_dim() const {
    long d = 0;
    for (const auto& [p, m] : mult) d += (long)irrep_dimension(p) * m;
    return d;
}

std::string Decomposition::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [p, m] : mult) {
        if (!first) os << ", ";
        first = false;
        os << p.str() << ":" << m;
    }
    os << '}';
    return os.str();
}

void BiDecomposition::add(const Partition& rho, const Partition& gamma, long m) {
    if (m == 0) return;
    long& v = mult[{rho, gamma}];
    v += m;
    if (v == 0) mult.erase({rho, gamma});
}

long BiDecomposition::operator[](const std::pair<Partition, Partition>& key) const {
    auto it = mult.find(key);
    return it == mult.end() ? 0 : it->second;
}

std::string BiDecomposition::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, m] : mult) {
        if (!first) os << ", ";
        first = false;
        os << '(' << k.first.str() << ',' << k.second.str() << "):" << m;
    }
    os << '}';
    return os.str();
}

BiClassFunction::BiClassFunction(int N_, int n_) : N(N_), n(n_) {
    values.assign(character_table(N).parts.size(),
                  std::vector<Rat>(character_table(n).parts.size(), Rat(0)));
}

ClassFunction irreducible_character(const Partition& lambda) {
    const CharTable& t = character_table(lambda.size());
    int l = t.index(lambda);
    std::vector<Rat> v(t.parts.size());
    for (size_t c = 0; c < t.parts.size(); ++c) v[c] = Rat((long)t.chi[l][c]);
    return ClassFunction(t.n, std::move(v));
}

ClassFunction trivial_character(int n) {
    const CharTable& t = character_table(n);
    return ClassFunction(n, std::vector<Rat>(t.parts.size(), Rat(1)));
}

ClassFunction sign_character(int n) {
    const CharTable& t = character_table(n);
    std::vector<Rat> v(t.parts.size());
    for (size_t c = 0; c < t.parts.size(); ++c) {
        int len = t.parts[c].length();
        v[c] = Rat(((n - len) % 2) ? -1 : 1);
    }
    return ClassFunction(n, std::move(v));
}

ClassFunction regular_character(int n) {
    const CharTable& t = character_table(n);
    std::vector<Rat> v(t.parts.size(), Rat(0));
    // identity class is (1^n), the last one in enumeration order
    for (size_t c = 0; c < t.parts.size(); ++c)
        if (t.parts[c].length() == n) v[c] = Rat((long)t.factorial);
    if (n == 0) v[0] = 1;
    return ClassFunction(n, std::move(v));
}

ClassFunction permutation_character_natural(int n) {
    const CharTable& t = character_table(n);
    std::vector<Rat> v(t.parts.size());
    for (size_t c = 0; c < t.parts.size(); ++c) {
        long fixed = 0;
        for (int p : t.parts[c].parts())
            if (p == 1) ++fixed;
        v[c] = Rat(fixed);
    }
    return ClassFunction(n, std::move(v));
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("inner_product: degree mismatch");
    const CharTable& t = character_table(f.n);
    Rat acc(0);
    for (size_t c = 0; c < t.parts.size(); ++c)
        acc += Rat(mpz_class(t.class_size[c])) * f[c] * g[c];
    acc /= Rat(mpz_class(t.factorial));
    return acc;
}

Decomposition decompose(const ClassFunction& f) {
    const CharTable& t = character_table(f.n);
    Decomposition d;
    d.n = f.n;
    for (size_t l = 0; l < t.parts.size(); ++l) {
        Rat m = inner_product(f, irreducible_character(t.parts[l]));
        if (m == 0) continue;
        if (m.get_den() != 1 || m < 0)
            throw std::domain_error("decompose: class function is not a character (multiplicity " +
                                    m.get_str() + " at " + t.parts[l].str() + ")");
        d.add(t.parts[l], (long)m.get_num().get_si());
    }
    return d;
}

BiDecomposition decompose_bi(const BiClassFunction& f) {
    const CharTable& tN = character_table(f.N);
    const CharTable& tn = character_table(f.n);
    BiDecomposition out;
    out.N = f.N;
    out.n = f.n;
    for (size_t r = 0; r < tN.parts.size(); ++r) {
        for (size_t g = 0; g < tn.parts.size(); ++g) {
            Rat acc(0);
            for (size_t c1 = 0; c1 < tN.parts.size(); ++c1)
                for (size_t c2 = 0; c2 < tn.parts.size(); ++c2)
                    acc += Rat(mpz_class(tN.class_size[c1]) * mpz_class(tn.class_size[c2])) *
                           f.values[c1][c2] * Rat((long)tN.chi[r][c1]) * Rat((long)tn.chi[g][c2]);
            acc /= Rat(mpz_class(tN.factorial) * mpz_class(tn.factorial));
            if (acc == 0) continue;
            if (acc.get_den() != 1 || acc < 0)
                throw std::domain_error("decompose_bi: not a bicharacter");
            out.add(tN.parts[r], tn.parts[g], (long)acc.get_num().get_si());
        }
    }
    return out;
}

ClassFunction add(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("add: degree mismatch");
    ClassFunction h = f;
    for (size_t c = 0; c < h.values.size(); ++c) h[c] += g[c];
    return h;
}

ClassFunction sub(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("sub: degree mismatch");
    ClassFunction h = f;
    for (size_t c = 0; c < h.values.size(); ++c) h[c] -= g[c];
    return h;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("pointwise_product: degree mismatch");
    ClassFunction h = f;
    for (size_t c = 0; c < h.values.size(); ++c) h[c] *= g[c];
    return h;
}

ClassFunction character_of(const Decomposition& d) {
    const CharTable& t = character_table(d.n);
    ClassFunction f(d.n, std::vector<Rat>(t.parts.size(), Rat(0)));
    for (const auto& [p, m] : d.mult) {
        ClassFunction chi = irreducible_character(p);
        for (size_t c = 0; c < t.parts.size(); ++c) f[c] += Rat(m) * chi[c];
    }
    return f;
}

namespace {

// all ways to split the multiset of parts of nu into a sub-multiset of total
// size a and its complement, with multiplicity prod_v C(m_v, k_v)
void enumerate_splits(const Partition& nu, int a,
                      const std::function<void(const Partition&, const Partition&, std::uint64_t)>& cb) {
    std::vector<std::pair<int, int>> groups;   // (value, multiplicity)
    {
        std::map<int, int, std::greater<int>> m;
        for (int v : nu.parts()) ++m[v];
        groups.assign(m.begin(), m.end());
    }
    std::vector<int> take(groups.size(), 0);
    auto binom = [](int n, int k) {
        std::uint64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (std::uint64_t)(n - k + i) / (std::uint64_t)i;
        return r;
    };
    auto rec = [&](auto&& self, size_t gi, int rem) -> void {
        if (gi == groups.size()) {
            if (rem != 0) return;
            std::vector<int> left, right;
            std::uint64_t coeff = 1;
            for (size_t i = 0; i < groups.size(); ++i) {
                coeff *= binom(groups[i].second, take[i]);
                for (int k = 0; k < take[i]; ++k) left.push_back(groups[i].first);
                for (int k = 0; k < groups[i].second - take[i]; ++k) right.push_back(groups[i].first);
            }
            cb(Partition(std::move(left)), Partition(std::move(right)), coeff);
            return;
        }
        for (int k = 0; k <= groups[gi].second && k * groups[gi].first <= rem; ++k) {
            take[gi] = k;
            self(self, gi + 1, rem - k * groups[gi].first);
        }
        take[gi] = 0;
    };
    rec(rec, 0, a);
}

Partition union_type(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::mutex g_skew_mutex;
std::map<std::pair<Partition, Partition>, Decomposition> g_skew_cache;
std::mutex g_kron_mutex;
std::map<std::pair<Partition, Partition>, Decomposition> g_kron_cache;

} // namespace

ClassFunction induce(const ClassFunction& f, const ClassFunction& g) {
    int a = f.n, b = g.n, n = a + b;
    const CharTable& t = character_table(n);
    const CharTable& ta = character_table(a);
    const CharTable& tb = character_table(b);
    ClassFunction h(n, std::vector<Rat>(t.parts.size(), Rat(0)));
    for (size_t c = 0; c < t.parts.size(); ++c) {
        Rat acc(0);
        enumerate_splits(t.parts[c], a, [&](const Partition& pa, const Partition& pb, std::uint64_t coeff) {
            acc += Rat(mpz_class(coeff)) * f[ta.index(pa)] * g[tb.index(pb)];
        });
        h[c] = acc;
    }
    return h;
}

ClassFunction restrict_to(const ClassFunction& f, int m) {
    if (m > f.n) throw std::invalid_argument("restrict_to: m > n");
    const CharTable& tn = character_table(f.n);
    const CharTable& tm = character_table(m);
    ClassFunction h(m, std::vector<Rat>(tm.parts.size(), Rat(0)));
    for (size_t c = 0; c < tm.parts.size(); ++c) {
        std::vector<int> parts = tm.parts[c].parts();
        parts.insert(parts.end(), (size_t)(f.n - m), 1);
        std::sort(parts.rbegin(), parts.rend());
        h[c] = f[tn.index(Partition(std::move(parts)))];
    }
    return h;
}

Decomposition skew_decomposition(const Partition& lambda, const Partition& alpha) {
    int n = lambda.size(), a = alpha.size();
    if (a > n) throw std::invalid_argument("skew_decomposition: |alpha| > |lambda|");
    {
        std::lock_guard<std::mutex> lock(g_skew_mutex);
        auto it = g_skew_cache.find({lambda, alpha});
        if (it != g_skew_cache.end()) return it->second;
    }
    Decomposition d;
    d.n = n - a;
    if (contains(alpha, lambda)) {
        // F(delta) = sum_{gamma |- a} |C_gamma|/a! chi^alpha(gamma) chi^lambda(gamma u delta)
        const CharTable& tn = character_table(n);
        const CharTable& ta = character_table(a);
        const CharTable& tb = character_table(n - a);
        int li = tn.index(lambda), ai = ta.index(alpha);
        ClassFunction F(n - a, std::vector<Rat>(tb.parts.size(), Rat(0)));
        for (size_t cd = 0; cd < tb.parts.size(); ++cd) {
            Rat acc(0);
            for (size_t cg = 0; cg < ta.parts.size(); ++cg) {
                Partition u = union_type(ta.parts[cg], tb.parts[cd]);
                acc += Rat(mpz_class(ta.class_size[cg])) * Rat((long)ta.chi[ai][cg]) *
                       Rat((long)tn.chi[li][tn.index(u)]);
            }
            F[cd] = acc / Rat(mpz_class(ta.factorial));
        }
        d = decompose(F);
    }
    std::lock_guard<std::mutex> lock(g_skew_mutex);
    return g_skew_cache.emplace(std::make_pair(lambda, alpha), std::move(d)).first->second;
}

long littlewood_richardson(const Partition& lambda, const Partition& alpha,
                           const Partition& beta) {
    if (alpha.size() + beta.size() != lambda.size()) return 0;
    if (!contains(alpha, lambda) || !contains(beta, lambda)) return 0;
    return skew_decomposition(lambda, alpha)[beta];
}

Decomposition kronecker(const Partition& nu, const Partition& lambda) {
    if (nu.size() != lambda.size()) throw std::invalid_argument("kronecker: degree mismatch");
    {
        std::lock_guard<std::mutex> lock(g_kron_mutex);
        auto it = g_kron_cache.find({nu, lambda});
        if (it != g_kron_cache.end()) return it->second;
    }
    Decomposition d =
        decompose(pointwise_product(irreducible_character(nu), irreducible_character(lambda)));
    std::lock_guard<std::mutex> lock(g_kron_mutex);
    return g_kron_cache.emplace(std::make_pair(nu, lambda), std::move(d)).first->second;
}

BiDecomposition induced_bimodule_decomposition(const Partition& mu, const Partition& nu) {
    int m = mu.size(), n = nu.size();
    BiDecomposition out;
    out.N = m + n;
    out.n = n;
    for (const Partition& rho : partitions_of(m + n)) {
        if (!contains(mu, rho)) continue;
        Decomposition skew = skew_decomposition(rho, mu);   // over S_n
        Decomposition slice;   // S^{rho/mu} (x) S^nu
        slice.n = n;
        for (const auto& [lambda, c] : skew.mult) {
            Decomposition k = kronecker(nu, lambda);
            for (const auto& [gamma, km] : k.mult) slice.add(gamma, c * km);
        }
        for (const auto& [gamma, t] : slice.mult) out.add(rho, gamma, t);
    }
    return out;
}

} // namespace beadhom
