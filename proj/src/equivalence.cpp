#include "polyrec/equivalence.hpp"

#include <algorithm>
#include <cassert>

namespace polyrec {

PSDecomposition decompose(const BinaryString& s) {
    const int n = s.size();
    PSDecomposition d;
    d.n = n;
    const WeightProfile p = weight_profile(s);
    const WeightProfile q = reciprocal(p);

    d.j.push_back(0);
    for (int i = 1; i <= n / 2; ++i)
        if (p.a[i] == q.a[i]) d.j.push_back(i);
    const int jl = d.j.back();
    d.j.push_back(n - jl);

    for (int i = 1; i < n; ++i)
        if (p.a[i] != q.a[i]) d.D.push_back(i);

    for (std::size_t i = 1; i < d.j.size(); ++i)
        if (d.j[i] - d.j[i - 1] >= 2) d.I.push_back(static_cast<int>(i));
    return d;
}

namespace {

// swap1: replace the profile terms of s by those of s* over every interior
// degree of the selected blocks, on both symmetric sides.
BinaryString swap_one(const BinaryString& s, const PSDecomposition& d, const std::set<int>& A) {
    const int n = s.size();
    const WeightProfile p = weight_profile(s);
    const WeightProfile q = reciprocal(p);
    WeightProfile out = p;
    for (int i : A) {
        for (int k = d.j[i - 1] + 1; k < d.j[i]; ++k) {
            out.a[k] = q.a[k];
            out.a[n - k] = q.a[n - k];
        }
    }
    // Lemma: swaps over full gap intervals whose endpoints agree always
    // produce a valid profile.
    assert(out.valid());
    return string_from_profile(out);
}

}  // namespace

std::vector<BinaryString> swap_strings(const BinaryString& s, const std::set<int>& A) {
    const PSDecomposition d = decompose(s);
    for (int i : A)
        if (std::find(d.I.begin(), d.I.end(), i) == d.I.end())
            throw std::invalid_argument("swap_strings: selection not a subset of I_s");

    std::vector<BinaryString> out;
    if (A.empty()) {
        out.push_back(s);
        out.push_back(s.reversed());
    } else {
        out.push_back(swap_one(s, d, A));
        out.push_back(swap_one(s.reversed(), decompose(s.reversed()), A));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BinaryString> equivalence_class(const BinaryString& s) {
    const PSDecomposition d = decompose(s);
    const int k = static_cast<int>(d.I.size());

    // Canonical open-under-complements family F_s: from each pair {A, I\A}
    // keep the lexicographically smaller subset under the sorted-element
    // encoding. That is the empty set, and every proper nonempty subset
    // containing the first element of I_s.
    std::vector<BinaryString> out;
    const unsigned full = k == 0 ? 0u : (1u << k) - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (mask != 0 && (!(mask & 1u) || mask == full)) continue;
        std::set<int> A;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) A.insert(d.I[b]);
        auto part = swap_strings(s, A);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_uniquely_reconstructible_up_to_reversal(const BinaryString& s) {
    if (s.size() < 2) return true;
    return decompose(s).I.size() < 2;
}

long long max_class_size(int n) {
    if (n < 2) throw std::invalid_argument("max_class_size: n must be >= 2");
    return 1LL << ((n - 2) / 4 + 1);
}

}  // namespace polyrec
