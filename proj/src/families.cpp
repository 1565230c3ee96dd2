#include "polyrec/families.hpp"

#include <algorithm>
#include <cassert>

#include "polyrec/equivalence.hpp"

namespace polyrec {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool is_catalan_bertrand(const BinaryString& s) {
    int zeros = 0, ones = 0;
    for (int i = 0; i < s.size(); ++i) {
        (s[i] ? ones : zeros)++;
        if (zeros <= ones) return false;
    }
    return true;
}

std::vector<BinaryString> enumerate_catalan_bertrand(int len) {
    std::vector<BinaryString> out;
    BinaryString cur;
    auto rec = [&](auto&& self, int zeros, int ones) -> void {
        if (cur.size() == len) {
            out.push_back(cur);
            return;
        }
        for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
            int z = zeros + (b == 0), o = ones + (b == 1);
            if (z <= o) continue;
            cur.push_back(b);
            self(self, z, o);
            cur = cur.substr(0, cur.size() - 1);
        }
    };
    if (len == 0) out.push_back({});
    else rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_catalan_bertrand(int len) {
    if (len < 0) throw std::invalid_argument("count_catalan_bertrand: negative length");
    if (len == 0) return 1;
    if (len % 2 == 1) return binomial(len - 1, (len - 1) / 2);
    return binomial(len, len / 2) / 2;
}

bool is_dyck(const BinaryString& s) {
    const int n = s.size();
    if (n % 2 != 0) throw std::invalid_argument("is_dyck: odd length");
    if (s.weight() != n / 2) return false;
    int w = 0;
    for (int i = 1; i <= n - 1; ++i) {
        w += s[i - 1];
        if (w < (i + 1) / 2) return false;
    }
    return true;
}

std::vector<BinaryString> enumerate_dyck(int len) {
    if (len % 2 != 0) throw std::invalid_argument("enumerate_dyck: odd length");
    std::vector<BinaryString> out;
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
        BinaryString s = BinaryString::from_index(v, len);
        if (is_dyck(s)) out.push_back(s);
    }
    return out;
}

long long catalan_number(int h) { return binomial(2 * h, h) / (h + 1); }

bool in_SR(const BinaryString& s) {
    const int n = s.size();
    if (n == 0) return true;
    if (n % 2 == 1) {
        if (n == 1) return true;
        BinaryString trimmed = s.substr(0, (n - 1) / 2) + s.substr((n + 1) / 2, (n - 1) / 2);
        return in_SR(trimmed);
    }
    if (s[0] != 0 || s[n - 1] != 1) return false;
    BinaryString sub;
    for (int i = 1; i <= n / 2; ++i)
        if (s[i - 1] != s[n - i]) sub.push_back(s[i - 1]);
    return is_catalan_bertrand(sub);
}

std::vector<BinaryString> enumerate_SR(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_SR: negative n");
    if (n == 0) return {BinaryString{}};
    if (n % 2 == 1) {
        std::vector<BinaryString> out;
        for (const auto& u : enumerate_SR(n - 1)) {
            const int h = (n - 1) / 2;
            for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
                BinaryString s = u.substr(0, h);
                s.push_back(b);
                s.append(u.substr(h, h));
                out.push_back(s);
            }
        }
        std::sort(out.begin(), out.end());
        assert(std::adjacent_find(out.begin(), out.end()) == out.end());
        return out;
    }

    const int half = n / 2;
    std::vector<BinaryString> out;
    std::vector<int> free_pos, diff_pos;
    // positions 2..n/2 (1-based) either mirror-equal (free symbol) or
    // mirror-different (driven by a Catalan-Bertrand string together with
    // position 1).
    for (unsigned mask = 0; mask < (1u << (half - 1)); ++mask) {
        diff_pos.assign(1, 1);
        free_pos.clear();
        for (int i = 2; i <= half; ++i)
            ((mask >> (i - 2)) & 1u ? diff_pos : free_pos).push_back(i);
        for (const auto& cb : enumerate_catalan_bertrand(static_cast<int>(diff_pos.size()))) {
            const unsigned freebits = 1u << free_pos.size();
            for (unsigned fm = 0; fm < freebits; ++fm) {
                std::vector<std::uint8_t> bits(n, 2);
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
    assert(std::adjacent_find(out.begin(), out.end()) == out.end());
    return out;
}

long long count_SR(int n) {
    if (n < 0) throw std::invalid_argument("count_SR: negative n");
    if (n == 0) return 1;
    if (n == 1) return 2;
    if (n % 2 == 1) return 2 * count_SR(n - 1);
    long long total = 0;
    for (int i = 0; i <= n / 2 - 1; ++i)
        total += binomial(n / 2 - 1, i) * (1LL << (n / 2 - 1 - i)) * binomial(i, i / 2);
    return total;
}

long long f_weight(int m) {
    if (m < 0) throw std::invalid_argument("f_weight: negative m");
    if (m == 0) return 1;
    if (m == 1) return 2;
    return 2 * count_SR(m);
}

bool in_A(const BinaryString& u) {
    const int m = u.size();
    if (m % 2 != 0 || m < 4) throw std::invalid_argument("in_A: m must be even and >= 4");
    const int h = m / 2;
    if (u[0] != 1 || u[h - 1] != 0 || u[h] != 1 || u[m - 1] != 0) return false;
    BinaryString sub;
    for (int i = 2; i <= h - 1; ++i)
        if (u[i - 1] != u[m - i]) sub.push_back(u[i - 1]);
    if (sub.size() % 2 != 0) return false;
    return is_dyck(sub);
}

std::vector<BinaryString> enumerate_A(int m) {
    if (m % 2 != 0 || m < 4) throw std::invalid_argument("enumerate_A: m must be even and >= 4");
    const int h = m / 2;
    std::vector<BinaryString> out;
    std::vector<int> interior;  // positions 2..h-1
    for (int i = 2; i <= h - 1; ++i) interior.push_back(i);
    const int k = static_cast<int>(interior.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> diff_pos, free_pos;
        for (int b = 0; b < k; ++b)
            ((mask >> b) & 1u ? diff_pos : free_pos).push_back(interior[b]);
        if (diff_pos.size() % 2 != 0) continue;
        for (const auto& dy : enumerate_dyck(static_cast<int>(diff_pos.size()))) {
            for (unsigned fm = 0; fm < (1u << free_pos.size()); ++fm) {
                std::vector<std::uint8_t> bits(m, 2);
                bits[0] = 1;
                bits[h - 1] = 0;
                bits[h] = 1;
                bits[m - 1] = 0;
                for (std::size_t d = 0; d < diff_pos.size(); ++d) {
                    const int i = diff_pos[d];
                    bits[i - 1] = dy[static_cast<int>(d)];
                    bits[m - i] = static_cast<std::uint8_t>(1 - dy[static_cast<int>(d)]);
                }
                for (std::size_t f = 0; f < free_pos.size(); ++f) {
                    const int i = free_pos[f];
                    const std::uint8_t b = (fm >> f) & 1u;
                    bits[i - 1] = b;
                    bits[m - i] = b;
                }
                out.emplace_back(std::move(bits));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long count_A(int m) {
    if (m % 2 != 0 || m < 4) throw std::invalid_argument("count_A: m must be even and >= 4");
    long long total = 0;
    for (int i = 0; 4 * i <= m - 4; ++i)
        total += binomial(m / 2 - 2, 2 * i) * (1LL << (m / 2 - 2 - 2 * i)) * catalan_number(i);
    return total;
}

bool in_D(const BinaryString& u) {
    const int m = u.size();
    if (m % 2 != 0 || m < 2) throw std::invalid_argument("in_D: m must be even and >= 2");
    if (m == 2) return u[0] == u[1];
    return in_A(u) || in_A(u.reversed());
}

std::vector<BinaryString> enumerate_D(int m) {
    if (m % 2 != 0 || m < 2) throw std::invalid_argument("enumerate_D: m must be even and >= 2");
    if (m == 2) return {BinaryString::parse("00"), BinaryString::parse("11")};
    std::vector<BinaryString> out = enumerate_A(m);
    for (const auto& u : enumerate_A(m)) out.push_back(u.reversed());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IndexTuple> enumerate_index_tuples(int n, bool restricted) {
    if (n < 1) throw std::invalid_argument("enumerate_index_tuples: n must be >= 1");
    std::vector<IndexTuple> out;
    // choose ell >= 0 and 1 <= j_1 < ... < j_ell <= floor(n/2)
    std::vector<int> mids;
    auto emit = [&] {
        IndexTuple t;
        t.push_back(0);
        t.insert(t.end(), mids.begin(), mids.end());
        const int jl = mids.empty() ? 0 : mids.back();
        t.push_back(n - jl);
        if (restricted) {
            int wide = 0;
            for (std::size_t i = 1; i < t.size(); ++i)
                if (t[i] - t[i - 1] >= 2) ++wide;
            if (wide > 1) return;
        }
        out.push_back(t);
    };
    auto rec = [&](auto&& self, int next) -> void {
        emit();
        for (int j = next; j <= n / 2; ++j) {
            mids.push_back(j);
            self(self, j + 1);
            mids.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Middle-block options at gap g: the (left, right) half pairs of every
// member of D(2g) -- or A(2g) when `dominant` asks for the prefix-heavy
// orientation only. Gap 1 blocks split {00, 11} either way.
std::vector<std::pair<BinaryString, BinaryString>> middle_options(int g, bool dominant) {
    std::vector<std::pair<BinaryString, BinaryString>> out;
    if (g == 1) {
        out.push_back({BinaryString::parse("0"), BinaryString::parse("0")});
        out.push_back({BinaryString::parse("1"), BinaryString::parse("1")});
        return out;
    }
    const auto words = dominant ? enumerate_A(2 * g) : enumerate_D(2 * g);
    for (const auto& d : words) out.push_back({d.substr(0, g), d.substr(g, g)});
    return out;
}

std::vector<BinaryString> final_options(int g, bool reversals_only) {
    if (g == 0) return {BinaryString{}};
    std::vector<BinaryString> out;
    for (const auto& u : enumerate_SR(g)) {
        if (!reversals_only) out.push_back(u);
        out.push_back(u.reversed());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Assemble every word for one index tuple given the per-block options.
void assemble(const std::vector<std::vector<std::pair<BinaryString, BinaryString>>>& mids,
              const std::vector<BinaryString>& finals, std::vector<BinaryString>& out) {
    const int ell = static_cast<int>(mids.size());
    std::vector<std::size_t> pick(ell, 0);
    while (true) {
        for (const auto& fin : finals) {
            BinaryString w;
            for (int i = 0; i < ell; ++i) w.append(mids[i][pick[i]].first);
            w.append(fin);
            for (int i = ell - 1; i >= 0; --i) w.append(mids[i][pick[i]].second);
            out.push_back(w);
        }
        int i = ell - 1;
        while (i >= 0 && ++pick[i] == mids[i].size()) pick[i--] = 0;
        if (i < 0) break;
    }
}

std::vector<BinaryString> enumerate_blockwise_impl(int n, bool doubled, bool dominant,
                                                   bool restricted) {
    std::vector<BinaryString> out;
    for (const auto& t : enumerate_index_tuples(n, restricted)) {
        const int ell = static_cast<int>(t.size()) - 2;
        // U'(n) excludes the degenerate all-unit-gap tuple with an empty
        // final block (even-length palindromes); see count_Uprime.
        if (doubled && 2 * ell == n) continue;
        std::vector<std::vector<std::pair<BinaryString, BinaryString>>> mids;
        bool dead = false;
        for (int i = 1; i <= ell; ++i) {
            const int g = t[i] - t[i - 1];
            std::vector<std::pair<BinaryString, BinaryString>> opts;
            if (doubled) {
                for (const auto& u : final_options(g, false)) opts.push_back({u, u});
            } else {
                opts = middle_options(g, dominant);
            }
            if (opts.empty()) dead = true;
            mids.push_back(std::move(opts));
        }
        if (dead) continue;
        const int gf = t[ell + 1] - t[ell];
        assemble(mids, final_options(gf, dominant), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<BinaryString> enumerate_blockwise_words(int n, bool doubled_middles,
                                                    bool dominant_orientation,
                                                    bool restricted_tuples) {
    return enumerate_blockwise_impl(n, doubled_middles, dominant_orientation, restricted_tuples);
}

std::vector<BinaryString> enumerate_U(int n) {
    return enumerate_blockwise_impl(n, false, false, true);
}

long long count_U(int n) {
    long long total = 0;
    for (const auto& t : enumerate_index_tuples(n, true)) {
        const int ell = static_cast<int>(t.size()) - 2;
        long long prod = 1;
        for (int i = 1; i <= ell + 1; ++i) {
            const int g = t[i] - t[i - 1];
            if (g == 0) continue;
            if (g == 1) prod *= 2;
            else if (i == ell + 1) prod *= 2 * count_SR(g);
            else prod *= 2 * count_A(2 * g);
        }
        total += prod;
    }
    return total;
}

std::vector<BinaryString> enumerate_Uprime(int n) {
    return enumerate_blockwise_impl(n, true, false, true);
}

long long count_Uprime(int n) {
    // f-weighted sum over P(n). Tuples whose gaps are all 1 with an empty
    // final block (possible only when ell = n/2) contribute even-length
    // palindromes that the doubled-block construction does not reach; they
    // are excluded so that the count matches the construction.
    long long total = 0;
    for (const auto& t : enumerate_index_tuples(n, true)) {
        const int ell = static_cast<int>(t.size()) - 2;
        if (2 * ell == n) continue;
        long long prod = 1;
        for (int i = 1; i <= ell + 1; ++i) prod *= f_weight(t[i] - t[i - 1]);
        total += prod;
    }
    return total;
}

BinaryString BlockFactorization::reassemble() const {
    BinaryString w;
    const int ell = static_cast<int>(t.size());
    for (int i = 0; i < ell; ++i) w.append(r[i]);
    w.append(r[ell]);
    for (int i = ell - 1; i >= 0; --i) w.append(t[i].reversed());
    return w;
}

BlockFactorization factorize(const BinaryString& s) {
    if (s.size() < 1) throw std::invalid_argument("factorize: empty string");
    const PSDecomposition d = decompose(s);
    BlockFactorization bf;
    bf.j = d.j;
    const int ell = d.ell();
    const int n = s.size();
    for (int i = 1; i <= ell; ++i) {
        bf.r.push_back(s.substr(d.j[i - 1], d.j[i] - d.j[i - 1]));
        bf.t.push_back(s.substr(n - d.j[i], d.j[i] - d.j[i - 1]).reversed());
    }
    bf.r.push_back(s.substr(d.j[ell], d.j[ell + 1] - d.j[ell]));
    return bf;
}

}  // namespace polyrec
