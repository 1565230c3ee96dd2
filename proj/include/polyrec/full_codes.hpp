// full_codes.hpp -- codes over the full composition multiset: window weight
// sums w_l, the pair-weight vector sigma, the families S_R^(t)(n), S^(t) and
// C_A^(t), the (t,2)-deletion asymmetric channel, the backtracking decoder,
// and the counting lemmas behind the size formulas.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyrec/bits.hpp"
#include "polyrec/ps_codes.hpp"

namespace polyrec {

/// w_l = sum of wt over all length-l windows, l = 1..n (returned 1-indexed
/// in [1..n]; index 0 unused). Requires even n.
std::vector<long long> weight_sums(const BinaryString& s);

/// sigma_l = wt(s_l s_{n-l+1}) recovered from w_1..w_{n/2} via the
/// telescoping identity w_l - w_{l-1} = wt(s_l^{n-l+1}).
std::vector<int> sigma_from_w(const std::vector<long long>& w, int n);
std::vector<int> sigma_direct(const BinaryString& s);

// --- the code families (n even, 2 <= t < n/2 - 4 for C_A^(t))
bool in_SRt(const BinaryString& s, int t);
std::vector<BinaryString> enumerate_SRt(int n, int t);
long long count_SRt_formula(int n, int t);

bool in_St(const BinaryString& s, int t);
std::vector<BinaryString> enumerate_St(int n, int t);
long long count_St_formula(int n, int t);

Codebook build_CAt(int n, int t);

// --- channel
struct DeleteSpec {
    std::vector<std::pair<int, int>> deletions;  // (length, count)
};

/// Deletes `count` randomly chosen elements from each listed length class.
CompositionMultiset channel_delete(const CompositionMultiset& m, const DeleteSpec& spec,
                                   std::uint64_t seed);
/// Seeded spec: at most t1 length classes lose at most t2 elements each;
/// asymmetric forbids touching both l and n-l+1.
DeleteSpec random_delete_spec(int n, int t1, int t2, bool asymmetric, std::uint64_t seed);

/// Reconstructs s in C_A^(t) from a full multiset after a (t,2)-deletion
/// asymmetric error: recovers all w_l (erroneous classes detected by
/// cardinality deficit, mirror class used instead), derives sigma, then
/// assigns the pairs (s_i, s_{n-i+1}) outside-in by depth-first search with
/// multiset-inclusion pruning. Returns nullopt if no codeword fits.
std::optional<BinaryString> backtrack_decode(const CompositionMultiset& m, int n, int t);

// --- counting lemmas
/// Number of integer solutions of y_1+..+y_k = total with y_i >= bounds[i].
long long count_integer_solutions(long long total, std::span<const long long> bounds);
/// L_m = sum_k C(m-k, k); equals fibonacci(m+1).
long long lucas_sum(int m);
/// F_1 = F_2 = 1.
long long fibonacci(int m);

}  // namespace polyrec
