#include "beadhom/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace beadhom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < (int)parts_.size()) ? parts_[i] : 0;
}

bool Partition::operator<(const Partition& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    // reverse-lexicographic: (n) < (n-1,1) < ... < (1^n)
    return parts_ > o.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::string t = s;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("malformed partition: " + s);
    t = t.substr(1, t.size() - 2);
    std::vector<int> parts;
    if (!t.empty()) {
        std::istringstream is(t);
        std::string item;
        while (std::getline(is, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("malformed partition: " + s);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-lexicographic enumeration, largest first
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool contains(const Partition& mu, const Partition& lambda) {
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

Partition hat(const Partition& lambda) {
    if (lambda.empty()) return Partition{};
    std::vector<int> p(lambda.parts().begin() + 1, lambda.parts().end());
    return Partition(std::move(p));
}

Partition transpose(const Partition& lambda) {
    if (lambda.empty()) return Partition{};
    std::vector<int> tr(lambda.part(0), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) ++tr[j];
    return Partition(std::move(tr));
}

Partition concat(int t, const Partition& mu) {
    if (t < mu.first()) throw std::invalid_argument("concat: t < mu_1 is not a partition");
    if (t == 0) return mu;
    std::vector<int> p;
    p.push_back(t);
    p.insert(p.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(p));
}

bool sequence_is_partition(const std::vector<int>& seq) {
    int prev = 1 << 30;
    for (int v : seq) {
        if (v < 0 || v > prev) return false;
        prev = v;
    }
    return true;
}

std::uint64_t irrep_dimension(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) return 1;
    Partition tr = transpose(lambda);
    // n! / prod(hooks), computed as an exact staged division
    std::vector<std::uint64_t> hooks;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            hooks.push_back((std::uint64_t)(lambda.part(i) - j - 1 + tr.part(j) - i - 1 + 1));
    // multiply numerator gradually, dividing when possible to avoid overflow
    __uint128_t num = 1;
    std::uint64_t pending = 1;
    auto push = [&](std::uint64_t f) {
        num *= f;
        for (auto& h : hooks) {
            if (h > 1 && num % h == 0) {
                num /= h;
                h = 1;
            }
        }
    };
    for (int k = 2; k <= n; ++k) push((std::uint64_t)k);
    (void)pending;
    for (auto h : hooks)
        if (h > 1) num /= h;
    return (std::uint64_t)num;
}

int partition_index(const Partition& lambda) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lambda.size());
    if (it == cache.end()) it = cache.emplace(lambda.size(), partitions_of(lambda.size())).first;
    const auto& list = it->second;
    for (int i = 0; i < (int)list.size(); ++i)
        if (list[i] == lambda) return i;
    throw std::logic_error("partition_index: not found");
}

} // namespace beadhom
