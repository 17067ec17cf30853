#include "beadhom/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace beadhom {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm r(p.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
    return r;
}

int perm_sign(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = (size_t)p[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Partition cycle_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = (size_t)p[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

Perm class_representative(const Partition& mu, int n) {
    if (mu.size() != n) throw std::invalid_argument("class_representative: |mu| != n");
    Perm p = perm_identity(n);
    int pos = 0;
    for (int k = 0; k < mu.length(); ++k) {
        int len = mu.part(k);
        for (int i = 0; i < len; ++i) p[pos + i] = pos + (i + 1) % len;
        pos += len;
    }
    return p;
}

std::vector<int> adjacent_word(const Perm& p) {
    Perm arr = p;
    std::vector<int> rec;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t j = 0; j + 1 < arr.size(); ++j) {
            if (arr[j] > arr[j + 1]) {
                std::swap(arr[j], arr[j + 1]);
                rec.push_back((int)j);
                moved = true;
            }
        }
    }
    std::reverse(rec.begin(), rec.end());
    return rec;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace beadhom
