#include "polyrec/full_codes.hpp"

#include <algorithm>
#include <random>

#include "polyrec/families.hpp"

namespace polyrec {

std::vector<long long> weight_sums(const BinaryString& s) {
    const int n = s.size();
    if (n % 2 != 0) throw std::invalid_argument("weight_sums: n must be even");
    std::vector<long long> w(n + 1, 0);
    for (int l = 1; l <= n; ++l) {
        long long acc = 0;
        int win = s.prefix_weight(l);
        acc = win;
        for (int i = 1; i + l <= n; ++i) {
            win += s[i + l - 1] - s[i - 1];
            acc += win;
        }
        w[l] = acc;
    }
    return w;
}

std::vector<int> sigma_from_w(const std::vector<long long>& w, int n) {
    if (n % 2 != 0) throw std::invalid_argument("sigma_from_w: n must be even");
    if (static_cast<int>(w.size()) < n / 2 + 2 && static_cast<int>(w.size()) < n + 1)
        throw std::invalid_argument("sigma_from_w: need w_1..w_{n/2+1}");
    const int half = n / 2;
    // T_l = wt(s_l^{n-l+1}) = w_l - w_{l-1}; sigma_l = T_l - T_{l+1}
    std::vector<int> sigma(half + 1, 0);
    auto wat = [&](int l) { return l == 0 ? 0LL : w[l]; };
    for (int l = 1; l < half; ++l)
        sigma[l] = static_cast<int>(2 * wat(l) - wat(l - 1) - wat(l + 1));
    sigma[half] = static_cast<int>(wat(half) - wat(half - 1));
    for (int l = 1; l <= half; ++l)
        if (sigma[l] < 0 || sigma[l] > 2) throw std::invalid_argument("sigma_from_w: inconsistent sums");
    return sigma;
}

std::vector<int> sigma_direct(const BinaryString& s) {
    const int n = s.size();
    if (n % 2 != 0) throw std::invalid_argument("sigma_direct: n must be even");
    std::vector<int> sigma(n / 2 + 1, 0);
    for (int i = 1; i <= n / 2; ++i) sigma[i] = s[i - 1] + s[n - i];
    return sigma;
}

bool in_SRt(const BinaryString& s, int t) {
    const int n = s.size();
    if (n % 2 != 0 || t < 1 || 2 * t > n) return false;
    for (int i = 1; i <= t; ++i)
        if (s[i - 1] != 0 || s[n - i] != 1) return false;
    BinaryString sub;
    for (int i = t + 1; i <= n / 2; ++i)
        if (s[i - 1] != s[n - i]) sub.push_back(s[i - 1]);
    return is_catalan_bertrand(sub);
}

std::vector<BinaryString> enumerate_SRt(int n, int t) {
    if (n % 2 != 0 || t < 1 || 2 * t > n) throw std::invalid_argument("enumerate_SRt: bad parameters");
    const int half = n / 2;
    const int band = half - t;  // free mirror positions t+1..n/2
    std::vector<BinaryString> out;
    for (unsigned mask = 0; mask < (1u << band); ++mask) {
        std::vector<int> diff_pos, free_pos;
        for (int i = t + 1; i <= half; ++i)
            ((mask >> (i - t - 1)) & 1u ? diff_pos : free_pos).push_back(i);
        for (const auto& cb : enumerate_catalan_bertrand(static_cast<int>(diff_pos.size()))) {
            for (unsigned fm = 0; fm < (1u << free_pos.size()); ++fm) {
                std::vector<std::uint8_t> bits(n);
                for (int i = 1; i <= t; ++i) {
                    bits[i - 1] = 0;
                    bits[n - i] = 1;
                }
                for (std::size_t d = 0; d < diff_pos.size(); ++d) {
                    const int i = diff_pos[d];
                    bits[i - 1] = cb[static_cast<int>(d)];
                    bits[n - i] = static_cast<std::uint8_t>(1 - cb[static_cast<int>(d)]);
                }
                for (std::size_t f = 0; f < free_pos.size(); ++f) {
                    const int i = free_pos[f];
                    const std::uint8_t b = (fm >> f) & 1u;
                    bits[i - 1] = b;
                    bits[n - i] = b;
                }
                out.emplace_back(std::move(bits));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long count_SRt_formula(int n, int t) {
    long long total = 0;
    for (int i = 0; i <= n / 2 - t; ++i)
        total += binomial(n / 2 - t, i) * (1LL << (n / 2 - t - i)) * count_catalan_bertrand(i);
    return total;
}

bool in_St(const BinaryString& s, int t) {
    const int n = s.size();
    if (n % 2 != 0 || !in_SR(s)) return false;
    std::vector<int> J;  // mirror-differing positions in [2, n/2]
    for (int i = 2; i <= n / 2; ++i)
        if (s[i - 1] != s[n - i]) J.push_back(i);
    const int l = static_cast<int>(J.size());
    if (l == 0) return true;
    if (J[0] < t + 1) return false;
    if (l == 1) return true;
    if (J[l - 1] >= n / 2) return false;
    if (l == 2) return true;
    for (int k = 1; k + 1 < l; ++k)
        if (J[k + 1] - J[k] < 2) return false;
    return true;
}

std::vector<BinaryString> enumerate_St(int n, int t) {
    if (n % 2 != 0) throw std::invalid_argument("enumerate_St: n must be even");
    std::vector<BinaryString> out;
    for (const auto& s : enumerate_SR(n))
        if (in_St(s, t)) out.push_back(s);
    return out;
}

long long count_St_formula(int n, int t) {
    long long total = 0;
    for (int l = 0; l <= n / 2 - t + 1; ++l)
        total += (1LL << (n / 2 - l - 1)) * binomial(n / 2 - t + 1 - l, l) *
                 count_catalan_bertrand(l + 1);
    return total;
}

Codebook build_CAt(int n, int t) {
    if (n % 2 != 0 || t < 2 || 2 * t >= n - 8)
        throw std::invalid_argument("build_CAt: need even n and 2 <= t < n/2 - 4");
    Codebook cb;
    cb.n = n;
    cb.kind = "CAt";
    cb.members = enumerate_SRt(n, t);
    auto st = enumerate_St(n, t);
    cb.members.insert(cb.members.end(), st.begin(), st.end());
    std::sort(cb.members.begin(), cb.members.end());
    const auto dup = std::adjacent_find(cb.members.begin(), cb.members.end());
    if (dup != cb.members.end()) throw std::logic_error("build_CAt: families overlap");
    return cb;
}

CompositionMultiset channel_delete(const CompositionMultiset& m, const DeleteSpec& spec,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CompositionMultiset out = m;
    for (auto [len, count] : spec.deletions) {
        for (int c = 0; c < count; ++c) {
            std::vector<Composition> pool;
            for (auto [wt, mult] : out.weights_at_length(len))
                for (long long i = 0; i < mult; ++i) pool.push_back({len, wt});
            if (pool.empty()) throw std::invalid_argument("channel_delete: class exhausted");
            out.remove(pool[rng() % pool.size()]);
        }
    }
    return out;
}

DeleteSpec random_delete_spec(int n, int t1, int t2, bool asymmetric, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> lengths(n);
    for (int l = 1; l <= n; ++l) lengths[l - 1] = l;
    std::shuffle(lengths.begin(), lengths.end(), rng);
    DeleteSpec spec;
    std::vector<char> used(n + 1, 0);
    for (int l : lengths) {
        if (static_cast<int>(spec.deletions.size()) == t1) break;
        if (asymmetric && used[n - l + 1]) continue;
        // cannot delete t2 elements from a class smaller than t2
        if (n - l + 1 < t2) continue;
        used[l] = 1;
        spec.deletions.push_back({l, t2});
    }
    return spec;
}

namespace {

struct LengthClass {
    std::map<int, long long> by_weight;  // weight -> multiplicity
    long long count = 0;
    long long weight_total = 0;
};

// Predicted composition multiset of the length-(n-k) windows given the
// outer 2k symbols; the window skipping prefix p and suffix k-p has weight
// W - wt(s_1^p) - wt(suffix of length k-p).
bool check_level(const std::vector<LengthClass>& classes, int n, int k, long long W,
                 const std::vector<int>& prefix_wt, const std::vector<int>& suffix_wt) {
    const auto& cls = classes[n - k];
    std::map<int, long long> predicted;
    for (int p = 0; p <= k; ++p) ++predicted[static_cast<int>(W) - prefix_wt[p] - suffix_wt[k - p]];
    for (const auto& [wt, mult] : cls.by_weight) {
        auto it = predicted.find(wt);
        if (it == predicted.end() || it->second < mult) return false;
    }
    return true;
}

}  // namespace

std::optional<BinaryString> backtrack_decode(const CompositionMultiset& m, int n, int t) {
    if (n % 2 != 0) throw std::invalid_argument("backtrack_decode: n must be even");

    std::vector<LengthClass> classes(n + 1);
    for (const auto& [c, mult] : m.entries()) {
        if (c.len < 1 || c.len > n) return std::nullopt;
        auto& cls = classes[c.len];
        cls.by_weight[c.wt] += mult;
        cls.count += mult;
        cls.weight_total += static_cast<long long>(c.wt) * mult;
    }

    // recover w_l, using the mirror class where a deficit shows
    int bad_classes = 0;
    std::vector<long long> w(n + 1, 0);
    for (int l = 1; l <= n; ++l) {
        const long long expected = n - l + 1;
        if (classes[l].count > expected || expected - classes[l].count > t) return std::nullopt;
        if (classes[l].count < expected) ++bad_classes;
    }
    if (bad_classes > t) return std::nullopt;
    for (int l = 1; l <= n; ++l) {
        const int mirror = n - l + 1;
        if (classes[l].count == n - l + 1) w[l] = classes[l].weight_total;
        else if (classes[mirror].count == l) w[l] = classes[mirror].weight_total;
        else return std::nullopt;  // both sides of the pair are deficient
    }

    std::vector<int> sigma;
    try {
        sigma = sigma_from_w(w, n);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    const long long W = w[1];

    const int half = n / 2;
    std::vector<std::uint8_t> bits(n, 0);
    std::vector<int> prefix_wt(half + 1, 0), suffix_wt(half + 1, 0);

    std::optional<BinaryString> found;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i > half) {
            BinaryString s{std::vector<std::uint8_t>(bits)};
            if (full_multiset(s).includes(m) && (in_SRt(s, t) || in_St(s, t))) {
                found = s;
                return true;
            }
            return false;
        }
        std::vector<std::pair<int, int>> options;
        if (sigma[i] == 0) options = {{0, 0}};
        else if (sigma[i] == 2) options = {{1, 1}};
        else options = {{0, 1}, {1, 0}};
        for (auto [lo, hi] : options) {
            bits[i - 1] = static_cast<std::uint8_t>(lo);
            bits[n - i] = static_cast<std::uint8_t>(hi);
            prefix_wt[i] = prefix_wt[i - 1] + lo;
            suffix_wt[i] = suffix_wt[i - 1] + hi;
            if (check_level(classes, n, i, W, prefix_wt, suffix_wt) && self(self, i + 1)) return true;
        }
        return false;
    };
    rec(rec, 1);
    return found;
}

long long count_integer_solutions(long long total, std::span<const long long> bounds) {
    if (total < 0) throw std::invalid_argument("count_integer_solutions: negative total");
    const int k = static_cast<int>(bounds.size());
    long long shift = 0;
    for (long long b : bounds) shift += b;
    if (total - shift < 0) return 0;
    return binomial(static_cast<int>(total + k - shift - 1), k - 1);
}

long long lucas_sum(int m) {
    if (m < 0) throw std::invalid_argument("lucas_sum: negative m");
    long long total = 0;
    for (int k = 0; k <= m; ++k) total += binomial(m - k, k);
    return total;
}

long long fibonacci(int m) {
    if (m < 1) throw std::invalid_argument("fibonacci: m must be >= 1");
    long long a = 1, b = 1;  // F_1, F_2
    for (int i = 3; i <= m; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return m == 1 ? 1 : b;
}

}  // namespace polyrec
