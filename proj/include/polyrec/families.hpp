// families.hpp -- constructive enumeration and counting of the string
// families underlying reconstructibility: Catalan-Bertrand strings, Dyck
// strings (ones-dominant variant), S_R(n), A(m)/D(m), index tuples
// P(n)/P'(n), the unique sets U(n)/U'(n), and block factorization.
//
// Note: a Dyck string here is ones-dominant -- length 2h, weight h, and
// wt(u_1^i) >= ceil(i/2) for every proper prefix. This is NOT the classical
// zeros-dominant ballot convention.

#pragma once

#include <vector>

#include "polyrec/bits.hpp"

namespace polyrec {

long long binomial(int n, int k);

// --- Catalan-Bertrand strings: every prefix has strictly more 0s than 1s.
bool is_catalan_bertrand(const BinaryString& s);
std::vector<BinaryString> enumerate_catalan_bertrand(int len);
/// M_0 = 1; M_i = C(i-1, (i-1)/2) for odd i, (1/2) C(i, i/2) for even i >= 2.
long long count_catalan_bertrand(int len);

// --- Dyck strings (ones-dominant) of even length.
bool is_dyck(const BinaryString& s);
std::vector<BinaryString> enumerate_dyck(int len);
long long catalan_number(int h);

// --- S_R(n): the mirror-indexed Catalan-Bertrand family. S_R(0) = {empty}.
bool in_SR(const BinaryString& s);
std::vector<BinaryString> enumerate_SR(int n);
long long count_SR(int n);
/// f(m): number of strings whose prefix/suffix weights differ at every
/// 1 <= j <= m-1; equals |S_R(m) u S_R(m)*|. f(0) = 1, f(1) = 2,
/// f(m) = 2|S_R(m)| for m >= 2.
long long f_weight(int m);

// --- A(m) and D(m), m even. D(2) = {00, 11}; D(m) = A(m) u A(m)* for m >= 4.
bool in_A(const BinaryString& u);
std::vector<BinaryString> enumerate_A(int m);
long long count_A(int m);
bool in_D(const BinaryString& u);
std::vector<BinaryString> enumerate_D(int m);

// --- Index tuples (j_0, ..., j_{ell+1}).
using IndexTuple = std::vector<int>;
/// restricted = true gives P(n): at most one gap >= 2. false gives P'(n).
std::vector<IndexTuple> enumerate_index_tuples(int n, bool restricted);

/// Shared block-assembly enumerator: words r^(1)..r^(ell) r^(ell+1)
/// (t^(ell))*..(t^(1))* over index tuples. Middle blocks come from D(2g)
/// splits (or A(2g) when dominant_orientation), or are doubled S_R blocks
/// when doubled_middles; the final block from S_R(g) u S_R(g)* (reversals
/// only when dominant_orientation). restricted_tuples selects P(n) over
/// P'(n).
std::vector<BinaryString> enumerate_blockwise_words(int n, bool doubled_middles,
                                                    bool dominant_orientation,
                                                    bool restricted_tuples);

// --- U(n): all strings uniquely reconstructible up to reversal, built from
// block factorizations; U'(n): the doubled-block subfamily.
std::vector<BinaryString> enumerate_U(int n);
long long count_U(int n);
std::vector<BinaryString> enumerate_Uprime(int n);
long long count_Uprime(int n);

/// The unique factorization s = r^(1)..r^(ell) r^(ell+1) (t^(ell))*..(t^(1))*
/// induced by the canonical decomposition. r.size() == ell+1,
/// t.size() == ell.
struct BlockFactorization {
    std::vector<int> j;
    std::vector<BinaryString> r;
    std::vector<BinaryString> t;

    BinaryString reassemble() const;
};

BlockFactorization factorize(const BinaryString& s);

}  // namespace polyrec
