#include "polyrec/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace polyrec {

const std::vector<BinaryString>& ClassPartition::class_of(const BinaryString& s) const {
    auto it = index.find(s.str());
    if (it == index.end()) throw std::invalid_argument("ClassPartition: string not of this length");
    return classes[it->second];
}

long long ClassPartition::max_class_size() const {
    std::size_t best = 0;
    for (const auto& c : classes) best = std::max(best, c.size());
    return static_cast<long long>(best);
}

namespace {

template <typename FingerprintFn>
ClassPartition partition_by(int n, int threads, FingerprintFn&& fp) {
    const std::uint64_t count = 1ull << n;
    std::vector<std::string> keys(count);

    threads = std::max(1, threads);
    if (threads == 1 || count < 1024) {
        for (std::uint64_t v = 0; v < count; ++v) keys[v] = fp(BinaryString::from_index(v, n));
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk, hi = std::min(count, lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::uint64_t v = lo; v < hi; ++v) keys[v] = fp(BinaryString::from_index(v, n));
            });
        }
        for (auto& th : pool) th.join();
    }

    // Deterministic merge: walking v in increasing (= lexicographic) order
    // assigns class ids ordered by smallest member.
    ClassPartition part;
    part.n = n;
    std::unordered_map<std::string, int> by_key;
    by_key.reserve(count * 2);
    for (std::uint64_t v = 0; v < count; ++v) {
        auto s = BinaryString::from_index(v, n);
        auto [it, fresh] = by_key.emplace(keys[v], static_cast<int>(part.classes.size()));
        if (fresh) part.classes.emplace_back();
        part.classes[it->second].push_back(s);
        part.index.emplace(s.str(), it->second);
    }
    return part;
}

}  // namespace

ClassPartition partition_by_ps_multiset(int n, int threads, OracleLimits limits) {
    if (n < 1 || n > limits.ps_cap)
        throw std::invalid_argument("partition_by_ps_multiset: n exceeds configured cap");
    return partition_by(n, threads,
                        [](const BinaryString& s) { return prefix_suffix_multiset(s).fingerprint(); });
}

ClassPartition partition_by_full_multiset(int n, int threads, OracleLimits limits) {
    if (n < 1 || n > limits.full_cap)
        throw std::invalid_argument("partition_by_full_multiset: n exceeds configured cap");
    return partition_by(n, threads,
                        [](const BinaryString& s) { return full_multiset(s).fingerprint(); });
}

std::vector<BinaryString> oracle_unique_set(int n) {
    auto part = partition_by_ps_multiset(n);
    std::vector<BinaryString> out;
    for (const auto& cls : part.classes) {
        const bool reversal_pair =
            cls.size() == 1 || (cls.size() == 2 && cls[0].reversed() == cls[1]);
        if (reversal_pair) out.insert(out.end(), cls.begin(), cls.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long oracle_max_class(int n) { return partition_by_ps_multiset(n).max_class_size(); }

}  // namespace polyrec
