// ps_codes.hpp -- composition codes over the prefix-suffix multiset: the
// maximal code Cmax, the decodable code E1(n), and the error-correcting
// wrappers E2 (missing compositions) and E3 (mass-reducing substitutions),
// together with the matching channel simulators.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyrec/bits.hpp"
#include "polyrec/reed_solomon.hpp"

namespace polyrec {

struct Codebook {
    int n = 0;
    std::string kind;
    std::vector<BinaryString> members;  // sorted

    long long size() const { return static_cast<long long>(members.size()); }
    bool contains(const BinaryString& s) const;
};

/// One representative per equivalence class (the lexicographically smallest
/// member); size = number of classes.
Codebook build_Cmax(int n);

/// E1 membership: wt(s_1^j) >= wt(s_{n-j+1}^n) for every j, equivalently the
/// canonical factorization is prefix-heavy in every block.
bool membership_E1(const BinaryString& s);
Codebook enumerate_E1(int n);
/// Tuple-weighted closed-form count over P'(n).
long long count_E1(int n);
/// log2 gap between n and |E1(n)|.
double redundancy_E1(int n);

/// Recovers the unique E1 codeword with this prefix-suffix multiset by
/// assigning the heavier composition of each length to the prefix chain.
/// Accepts both the 2n-1 and 2n multiset conventions. Returns nullopt when
/// the multiset is inconsistent or not a codeword's.
std::optional<BinaryString> decode_E1(const CompositionMultiset& m);

// ---------------------------------------------------------------- channels

enum class Side { prefix, suffix };

struct MissingSpec {
    std::vector<std::pair<Side, int>> drops;  // (side, length)
};

struct MassReduceError {
    Side side;
    int length;
    int decrease;  // in [1, t]
};

struct MassReduceSpec {
    std::vector<MassReduceError> errors;
};

/// Removes the dropped compositions. Requires the source multiset to come
/// from a prefix-heavy codeword so a (side, length) pair names a unique
/// entry (prefix = heavier).
CompositionMultiset channel_missing(const CompositionMultiset& m, const MissingSpec& spec);
/// Reduces weights per spec, validating the adjacency rule per side.
CompositionMultiset channel_mass_reduce(const CompositionMultiset& m, const MassReduceSpec& spec);

MissingSpec random_missing_spec(int big_n, int t, std::uint64_t seed);
/// Seeded (e1, e2, t)-spec against a concrete codeword; drops are classified
/// so that at most e1 compatible and at most e2 incompatible errors occur.
MassReduceSpec random_mass_reduce_spec(const BinaryString& codeword, int e1, int e2, int t,
                                       std::uint64_t seed);

// ------------------------------------------------------------- outer codes

/// Systematic block code over GF(2^sym_bits) used as the outer layer.
struct OuterCodeSpec {
    int sym_bits = 0;
    int m = 0;  // block length in symbols
    int k = 0;  // dimension in symbols
    int d = 0;  // minimum distance

    static OuterCodeSpec rs(int sym_bits, int m, int k);
    int parity_symbols() const { return m - k; }
    int parity_bits() const { return sym_bits * (m - k); }
};

/// How many positions the decoder erases per missing length: conservative
/// erases both the prefix- and suffix-side pairs (budget 4t), sharp trusts
/// the intact mirror length (budget 2t).
enum class ErasureBudget { conservative, sharp };

/// c = r* s r with s in E1(n); r carries the outer parity bits.
BinaryString encode_E2(const BinaryString& s, int t, const OuterCodeSpec& outer);
std::optional<BinaryString> decode_E2(const CompositionMultiset& m, int t,
                                      const OuterCodeSpec& outer,
                                      ErasureBudget budget = ErasureBudget::conservative);

/// c = 1^t r* s r 0^t with s in E1(n); survives (e1, e2, t)-mass-reducing
/// substitution errors when the outer code corrects 2e1 errors + 2e2
/// erasures (4e1 + 2e2 <= d - 1).
BinaryString encode_E3(const BinaryString& s, int e1, int e2, int t, const OuterCodeSpec& outer);
std::optional<BinaryString> decode_E3(const CompositionMultiset& m, int e1, int e2, int t,
                                      const OuterCodeSpec& outer);

}  // namespace polyrec
