#include "polyrec/ps_codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "polyrec/equivalence.hpp"
#include "polyrec/families.hpp"

namespace polyrec {

bool Codebook::contains(const BinaryString& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

Codebook build_Cmax(int n) {
    if (n < 1) throw std::invalid_argument("build_Cmax: n must be >= 1");
    Codebook cb;
    cb.n = n;
    cb.kind = "Cmax";
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        BinaryString s = BinaryString::from_index(v, n);
        if (equivalence_class(s).front() == s) cb.members.push_back(s);
    }
    return cb;
}

bool membership_E1(const BinaryString& s) {
    const int n = s.size();
    const WeightProfile p = weight_profile(s);
    for (int j = 1; j <= n; ++j)
        if (p.a[j] < p.weight() - p.a[n - j]) return false;
    return true;
}

Codebook enumerate_E1(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_E1: n must be >= 1");
    Codebook cb;
    cb.n = n;
    cb.kind = "E1";
    cb.members = enumerate_blockwise_words(n, false, true, false);
    return cb;
}

long long count_E1(int n) {
    long long total = 0;
    for (const auto& t : enumerate_index_tuples(n, false)) {
        const int ell = static_cast<int>(t.size()) - 2;
        long long prod = 1;
        for (int i = 1; i <= ell + 1; ++i) {
            const int g = t[i] - t[i - 1];
            if (g == 0) continue;
            if (g == 1) prod *= 2;
            else if (i == ell + 1) prod *= count_SR(g);
            else prod *= count_A(2 * g);
        }
        total += prod;
    }
    return total;
}

double redundancy_E1(int n) { return n - std::log2(static_cast<double>(count_E1(n))); }

std::optional<BinaryString> decode_E1(const CompositionMultiset& m_in) {
    const CompositionMultiset m = normalize_prefix_suffix(m_in);
    const long long total = m.total();
    if (total % 2 != 1) return std::nullopt;
    const int n = static_cast<int>((total + 1) / 2);

    WeightProfile p;
    p.a.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        auto ws = m.weights_at_length(i);
        long long cnt = 0;
        int max_wt = -1;
        for (auto [wt, mult] : ws) {
            cnt += mult;
            max_wt = std::max(max_wt, wt);
        }
        if (cnt != (i == n ? 1 : 2)) return std::nullopt;
        p.a[i] = max_wt;
    }
    if (!p.valid()) return std::nullopt;
    BinaryString s = string_from_profile(p);
    if (prefix_suffix_multiset(s) != m) return std::nullopt;
    return s;
}

// ---------------------------------------------------------------- channels

CompositionMultiset channel_missing(const CompositionMultiset& m, const MissingSpec& spec) {
    CompositionMultiset out = m;
    for (auto [side, len] : spec.drops) {
        auto ws = out.weights_at_length(len);
        if (ws.empty()) throw std::invalid_argument("channel_missing: no composition of that length left");
        int wt = side == Side::prefix ? ws.back().first : ws.front().first;
        out.remove({len, wt});
    }
    return out;
}

CompositionMultiset channel_mass_reduce(const CompositionMultiset& m, const MassReduceSpec& spec) {
    // adjacency: per side, no two erroneous lengths within distance 1
    for (std::size_t i = 0; i < spec.errors.size(); ++i)
        for (std::size_t j = i + 1; j < spec.errors.size(); ++j) {
            const auto& a = spec.errors[i];
            const auto& b = spec.errors[j];
            if (a.side == b.side && std::abs(a.length - b.length) <= 1)
                throw std::invalid_argument("channel_mass_reduce: adjacent errors on one side");
        }
    // pick targets against the clean multiset, then apply
    std::vector<std::pair<Composition, Composition>> edits;
    for (const auto& e : spec.errors) {
        if (e.decrease < 1) throw std::invalid_argument("channel_mass_reduce: decrease must be >= 1");
        auto ws = m.weights_at_length(e.length);
        if (ws.empty()) throw std::invalid_argument("channel_mass_reduce: no composition of that length");
        int wt = e.side == Side::prefix ? ws.back().first : ws.front().first;
        if (wt - e.decrease < 0) throw std::invalid_argument("channel_mass_reduce: weight underflow");
        edits.push_back({{e.length, wt}, {e.length, wt - e.decrease}});
    }
    CompositionMultiset out = m;
    for (auto& [from, to] : edits) {
        out.remove(from);
        out.add(to);
    }
    return out;
}

MissingSpec random_missing_spec(int big_n, int t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Side, int>> pool;
    for (int i = 1; i < big_n; ++i) {
        pool.push_back({Side::prefix, i});
        pool.push_back({Side::suffix, i});
    }
    pool.push_back({Side::prefix, big_n});  // canonical multiset holds one full composition
    std::shuffle(pool.begin(), pool.end(), rng);
    MissingSpec spec;
    for (int i = 0; i < t && i < static_cast<int>(pool.size()); ++i) spec.drops.push_back(pool[i]);
    return spec;
}

MassReduceSpec random_mass_reduce_spec(const BinaryString& codeword, int e1, int e2, int t,
                                       std::uint64_t seed) {
    const int n = codeword.size();
    std::mt19937_64 rng(seed);
    const WeightProfile p = weight_profile(codeword);

    auto chain_value = [&](Side side, int i) {
        return side == Side::prefix ? p.a[i] : p.weight() - p.a[n - i];
    };
    // classification per the three-level analysis; level n uses the
    // virtual continuation b3 = b2
    auto classify = [&](Side side, int i, int dec) -> int {
        const int b1 = chain_value(side, i - 1);
        const int b2 = chain_value(side, i);
        const int b3 = i == n ? b2 : chain_value(side, i + 1);
        if (b3 == b2 && b2 == b1 + 1) return dec == 1 ? 1 : 2;  // 1 compatible, 2 incompatible
        return 0;                                               // locally correctable
    };

    std::vector<std::pair<Side, int>> positions;
    for (int i = 1; i <= n; ++i) {
        positions.push_back({Side::prefix, i});
        if (i < n) positions.push_back({Side::suffix, i});
    }
    std::shuffle(positions.begin(), positions.end(), rng);

    MassReduceSpec spec;
    std::map<int, std::vector<int>> used;  // side index -> lengths taken
    auto adjacent_free = [&](Side side, int i) {
        for (int len : used[static_cast<int>(side)])
            if (std::abs(len - i) <= 1) return false;
        return true;
    };
    int want1 = e1, want2 = e2, want0 = 2;
    for (auto [side, i] : positions) {
        if (want1 + want2 + want0 == 0) break;
        if (!adjacent_free(side, i)) continue;
        const int b2 = chain_value(side, i);
        if (b2 < 1) continue;
        const int kind1 = classify(side, i, 1);
        if (kind1 == 1 && want1 > 0) {
            spec.errors.push_back({side, i, 1});
            used[static_cast<int>(side)].push_back(i);
            --want1;
            continue;
        }
        if (t >= 2 && b2 >= 2) {
            const int dec = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(t, b2) - 1));
            if (classify(side, i, dec) == 2 && want2 > 0) {
                spec.errors.push_back({side, i, dec});
                used[static_cast<int>(side)].push_back(i);
                --want2;
                continue;
            }
        }
        if (kind1 == 0 && want0 > 0) {
            const int dec = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(t, b2)));
            if (classify(side, i, dec) == 0) {
                spec.errors.push_back({side, i, dec});
                used[static_cast<int>(side)].push_back(i);
                --want0;
            }
        }
    }
    return spec;
}

// ------------------------------------------------------------- outer codes

OuterCodeSpec OuterCodeSpec::rs(int sym_bits, int m, int k) {
    OuterCodeSpec spec;
    spec.sym_bits = sym_bits;
    spec.m = m;
    spec.k = k;
    spec.d = m - k + 1;
    ReedSolomon(sym_bits, m, k);  // validates the parameters
    return spec;
}

namespace {

std::vector<int> pack_bits(const BinaryString& s, int sym_bits, int k) {
    std::vector<int> syms(k, 0);
    for (int i = 0; i < s.size(); ++i)
        if (s[i]) syms[i / sym_bits] |= 1 << (i % sym_bits);
    return syms;
}

BinaryString unpack_bits(const std::vector<int>& syms, int sym_bits, int n_bits) {
    BinaryString out;
    for (int i = 0; i < n_bits; ++i)
        out.push_back(static_cast<std::uint8_t>((syms[i / sym_bits] >> (i % sym_bits)) & 1));
    return out;
}

BinaryString parity_bits_of(const BinaryString& s, const OuterCodeSpec& outer) {
    ReedSolomon rs(outer.sym_bits, outer.m, outer.k);
    auto cw = rs.encode(pack_bits(s, outer.sym_bits, outer.k));
    BinaryString r;
    for (int i = outer.k; i < outer.m; ++i)
        for (int j = 0; j < outer.sym_bits; ++j)
            r.push_back(static_cast<std::uint8_t>((cw[i] >> j) & 1));
    return r;
}

void check_message_fits(const BinaryString& s, const OuterCodeSpec& outer) {
    if (!membership_E1(s)) throw std::invalid_argument("encode: message not an E1 codeword");
    if (s.size() > outer.k * outer.sym_bits)
        throw std::invalid_argument("encode: message does not fit in k symbols");
}

constexpr int kUnknown = -1;

struct BitDraft {
    std::vector<int> bit;  // 1-based positions; kUnknown marks erasure

    explicit BitDraft(int n) : bit(n + 1, kUnknown) {}
};

// Chain values v_0..v_N with v_0 = 0; kUnknown marks undecided levels.
// hard[i] >= 0 pins known pad levels.
struct Chain {
    std::vector<int> v;

    int n() const { return static_cast<int>(v.size()) - 1; }
};

// Repairs one observation chain under the mass-reducing model: weights only
// drop, neighbors of an erroneous level are correct. Returns false on a
// contract violation.
bool repair_chain(Chain& c) {
    const int n = c.n();
    auto at = [&](int i) { return i <= 0 ? 0 : c.v[i]; };
    std::vector<int> flagged;
    for (int i = 1; i <= n; ++i) {
        const int step = at(i) - at(i - 1);
        if (step < 0) flagged.push_back(i);
        else if (step > 1 && i - 1 >= 1) flagged.push_back(i - 1);
    }
    std::sort(flagged.begin(), flagged.end());
    flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
    for (int i : flagged) {
        const int b1 = at(i - 1);
        int lo = b1, hi = b1 + 1;
        if (i < n) {
            const int b3 = at(i + 1);
            lo = std::max(lo, b3 - 1);
            hi = std::min(hi, b3);
        }
        if (lo > hi) return false;
        c.v[i] = lo == hi ? lo : kUnknown;
    }
    return true;
}

// Fold one repaired chain into the bit draft. forward = prefix chain
// (bit i = v_i - v_{i-1}); backward = suffix chain (bit n-i+1 = v_i - v_{i-1}).
// The prefix chain is folded first and wins on disagreement.
void fold_chain(BitDraft& draft, const Chain& c, bool forward) {
    const int n = c.n();
    for (int i = 1; i <= n; ++i) {
        if (c.v[i] == kUnknown || (i > 1 && c.v[i - 1] == kUnknown)) continue;
        const int prev = i == 1 ? 0 : c.v[i - 1];
        const int b = c.v[i] - prev;
        if (b != 0 && b != 1) continue;
        const int pos = forward ? i : n - i + 1;
        if (draft.bit[pos] == kUnknown) draft.bit[pos] = b;
    }
}

struct LengthStats {
    int count = 0;
    int max_wt = -1;
    int min_wt = -1;
};

std::vector<LengthStats> stats_by_length(const CompositionMultiset& m, int n) {
    std::vector<LengthStats> st(n + 1);
    for (const auto& [c, mult] : m.entries()) {
        if (c.len < 1 || c.len > n) return {};
        auto& s = st[c.len];
        s.count += static_cast<int>(mult);
        s.max_wt = s.max_wt < 0 ? c.wt : std::max(s.max_wt, c.wt);
        s.min_wt = s.min_wt < 0 ? c.wt : std::min(s.min_wt, c.wt);
    }
    return st;
}

// Shared tail of the E2/E3 decoders: fill parity-mirror bits, symbolize,
// run the outer decoder, unpack and verify the message.
std::optional<BinaryString> finish_decode(BitDraft& draft, int n, int pad, int big_n,
                                          const OuterCodeSpec& outer) {
    const int L = outer.parity_bits();
    // pads are known a priori
    for (int i = 1; i <= pad; ++i) {
        draft.bit[i] = 1;
        draft.bit[big_n - i + 1] = 0;
    }
    // r* and r carry the same bits: positions pad+p and big_n-pad+1-p match
    for (int x = 1; x <= L; ++x) {
        const int a = pad + x, b = big_n - pad + 1 - x;
        if (draft.bit[a] == kUnknown) draft.bit[a] = draft.bit[b];
        if (draft.bit[b] == kUnknown) draft.bit[b] = draft.bit[a];
    }

    const int msg_lo = pad + L + 1;  // message bits occupy [msg_lo, msg_lo + n)
    std::vector<int> received(outer.m, 0);
    std::vector<int> erasures;
    auto set_symbol_bit = [&](int sym, int bit_in_sym, int value) {
        if (value == 1) received[sym] |= 1 << bit_in_sym;
    };
    for (int i = 0; i < n; ++i) {
        const int b = draft.bit[msg_lo + i];
        if (b == kUnknown) erasures.push_back(i / outer.sym_bits);
        else set_symbol_bit(i / outer.sym_bits, i % outer.sym_bits, b);
    }
    for (int x = 1; x <= L; ++x) {
        const int b = draft.bit[pad + L + n + x];  // bit x of r
        const int sym = outer.k + (x - 1) / outer.sym_bits;
        if (b == kUnknown) erasures.push_back(sym);
        else set_symbol_bit(sym, (x - 1) % outer.sym_bits, b);
    }
    std::sort(erasures.begin(), erasures.end());
    erasures.erase(std::unique(erasures.begin(), erasures.end()), erasures.end());

    ReedSolomon rs(outer.sym_bits, outer.m, outer.k);
    auto corrected = rs.decode(received, erasures);
    if (!corrected) return std::nullopt;
    // padding bits beyond n must be zero
    for (int i = n; i < outer.k * outer.sym_bits; ++i)
        if ((((*corrected)[i / outer.sym_bits]) >> (i % outer.sym_bits)) & 1) return std::nullopt;
    BinaryString s = unpack_bits(*corrected, outer.sym_bits, n);
    if (!membership_E1(s)) return std::nullopt;
    return s;
}

}  // namespace

BinaryString encode_E2(const BinaryString& s, int t, const OuterCodeSpec& outer) {
    if (t < 1) throw std::invalid_argument("encode_E2: t must be >= 1");
    if (outer.d < 2 * t + 1) throw std::invalid_argument("encode_E2: outer distance below 2t+1");
    check_message_fits(s, outer);
    const BinaryString r = parity_bits_of(s, outer);
    return r.reversed() + s + r;
}

std::optional<BinaryString> decode_E2(const CompositionMultiset& m_in, int t,
                                      const OuterCodeSpec& outer, ErasureBudget budget) {
    const CompositionMultiset m = normalize_prefix_suffix(m_in);
    const int L = outer.parity_bits();
    int max_len = 0;
    for (const auto& [c, mult] : m.entries()) max_len = std::max(max_len, c.len);

    for (int big_n : {max_len, max_len + 1}) {
        const int n = big_n - 2 * L;
        if (n < 1 || n > outer.k * outer.sym_bits) continue;
        if (m.total() > 2LL * big_n - 1 || m.total() < 2LL * big_n - 1 - t) continue;
        auto st = stats_by_length(m, big_n);
        if (st.empty()) continue;

        bool bad = false;
        int missing = 0;
        std::vector<int> deficient;
        std::vector<int> a(big_n + 1, kUnknown);
        a[0] = 0;
        for (int i = 1; i <= big_n && !bad; ++i) {
            const int expected = i == big_n ? 1 : 2;
            if (st[i].count > expected) bad = true;
            else if (st[i].count < expected) {
                missing += expected - st[i].count;
                deficient.push_back(i);
            } else {
                a[i] = st[i].max_wt;
            }
        }
        if (bad || missing > t) continue;

        BitDraft draft(big_n);
        for (int i = 1; i <= big_n; ++i) {
            if (a[i] == kUnknown || a[i - 1] == kUnknown) continue;
            const int b = a[i] - a[i - 1];
            if (b != 0 && b != 1) {
                bad = true;
                break;
            }
            draft.bit[i] = b;
        }
        if (bad) continue;
        if (budget == ErasureBudget::conservative) {
            for (int i : deficient)
                for (int pos : {i, i + 1, big_n - i, big_n - i + 1})
                    if (pos >= 1 && pos <= big_n) draft.bit[pos] = kUnknown;
        }

        auto s = finish_decode(draft, n, 0, big_n, outer);
        if (!s) continue;
        // verification against the received multiset
        const BinaryString c = encode_E2(*s, t, outer);
        const CompositionMultiset full = prefix_suffix_multiset(c);
        if (!full.includes(m) || full.total() - m.total() > t) continue;
        return s;
    }
    return std::nullopt;
}

BinaryString encode_E3(const BinaryString& s, int e1, int e2, int t, const OuterCodeSpec& outer) {
    if (e1 < 0 || e2 < 0 || t < 2) throw std::invalid_argument("encode_E3: need e1,e2 >= 0 and t >= 2");
    if (4 * e1 + 2 * e2 > outer.d - 1)
        throw std::invalid_argument("encode_E3: outer distance below 4e1+2e2+1");
    check_message_fits(s, outer);
    const BinaryString r = parity_bits_of(s, outer);
    return BinaryString::ones(t) + r.reversed() + s + r + BinaryString::zeros(t);
}

std::optional<BinaryString> decode_E3(const CompositionMultiset& m_in, int e1, int e2, int t,
                                      const OuterCodeSpec& outer) {
    (void)e1;
    (void)e2;
    const CompositionMultiset m = normalize_prefix_suffix(m_in);
    const int L = outer.parity_bits();
    int big_n = 0;
    for (const auto& [c, mult] : m.entries()) big_n = std::max(big_n, c.len);
    const int n = big_n - 2 * L - 2 * t;
    if (n < 1 || n > outer.k * outer.sym_bits) return std::nullopt;

    auto st = stats_by_length(m, big_n);
    if (st.empty()) return std::nullopt;
    Chain prefix, suffix;
    prefix.v.assign(big_n + 1, kUnknown);
    suffix.v.assign(big_n + 1, kUnknown);
    prefix.v[0] = suffix.v[0] = 0;
    for (int i = 1; i <= big_n; ++i) {
        const int expected = i == big_n ? 1 : 2;
        if (st[i].count != expected) return std::nullopt;
        prefix.v[i] = st[i].max_wt;
        suffix.v[i] = i == big_n ? st[i].max_wt : st[i].min_wt;
    }
    // pad levels are known exactly
    for (int i = 1; i <= t; ++i) {
        prefix.v[i] = i;
        suffix.v[i] = 0;
    }
    if (!repair_chain(prefix) || !repair_chain(suffix)) return std::nullopt;

    BitDraft draft(big_n);
    fold_chain(draft, prefix, true);
    fold_chain(draft, suffix, false);
    return finish_decode(draft, n, t, big_n, outer);
}

}  // namespace polyrec
