// equivalence.hpp -- the swap calculus over prefix-suffix multisets:
// decomposition indices, swap sets, equivalence classes E(s), the
// unique-reconstructibility decision and the maximum class size E_n.

#pragma once

#include <set>
#include <vector>

#include "polyrec/bits.hpp"

namespace polyrec {

/// The index skeleton of a string: j_0 = 0 < j_1 < ... < j_ell <= floor(n/2)
/// are the indices where prefix and suffix weights agree, plus
/// j_{ell+1} = n - j_ell. D holds the degrees where the profiles of s and
/// s* differ; I the block indices with gap >= 2 (the swappable blocks).
struct PSDecomposition {
    int n = 0;
    std::vector<int> j;  // j[0..ell+1]
    std::vector<int> D;  // symmetric under i -> n-i
    std::vector<int> I;  // subset of {1..ell+1}

    int ell() const { return static_cast<int>(j.size()) - 2; }
};

PSDecomposition decompose(const BinaryString& s);

/// swap(s, A) = swap1(s, A) u swap1(s*, A) for A a subset of I_s.
/// Every member t has M(t) = M(s); the result has one element iff s = s*.
/// Returned sorted. Throws if A is not a subset of I_s.
std::vector<BinaryString> swap_strings(const BinaryString& s, const std::set<int>& A);

/// E(s) = {t : M(t) = M(s)}, built as the union of swap(s, A) over a
/// canonical open-under-complements family from 2^{I_s}. Sorted; size is
/// exactly 2^{|I_s|}.
std::vector<BinaryString> equivalence_class(const BinaryString& s);

/// False iff |I_s| >= 2 (equivalently |E(s)| > 2).
bool is_uniquely_reconstructible_up_to_reversal(const BinaryString& s);

/// E_n = 2^{floor((n-2)/4)+1}, the largest class size at length n >= 2.
long long max_class_size(int n);

}  // namespace polyrec
