// bits.hpp -- binary strings, compositions, composition multisets and
// weight profiles: the value types everything else is built on.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyrec {

/// A fixed-length word over {0,1}. Indexing is 0-based internally; the
/// 1-based conventions of prefix/suffix arithmetic live in free functions.
class BinaryString {
public:
    BinaryString() = default;
    explicit BinaryString(std::vector<std::uint8_t> bits);

    /// Parses "0101...". Throws std::invalid_argument on anything else.
    static BinaryString parse(std::string_view text);
    static BinaryString zeros(int n);
    static BinaryString ones(int n);
    /// The i-th length-n string in lexicographic order (0 <= value < 2^n).
    static BinaryString from_index(std::uint64_t value, int n);

    int size() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }

    void push_back(std::uint8_t b);
    void append(const BinaryString& other);

    BinaryString reversed() const;
    /// Substring [pos, pos+len), 0-based.
    BinaryString substr(int pos, int len) const;

    int weight() const;
    /// wt(s_1^j) for 0 <= j <= n (1-based prefix length).
    int prefix_weight(int j) const;
    /// wt(s_{n-j+1}^n) for 0 <= j <= n.
    int suffix_weight(int j) const;

    bool is_palindrome() const { return *this == reversed(); }

    std::string str() const;
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    auto operator<=>(const BinaryString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

BinaryString operator+(const BinaryString& a, const BinaryString& b);

/// Unordered content of a binary fragment, canonically (length, weight).
struct Composition {
    int len = 0;
    int wt = 0;

    auto operator<=>(const Composition&) const = default;

    /// Canonical text form "0^a*1^b" with zero exponents omitted, "e" when empty.
    std::string str() const;
    static Composition parse(std::string_view text);
};

Composition composition(const BinaryString& s);

enum class MultisetKind { prefix_suffix, full, length_l, length_limited };

std::string kind_name(MultisetKind kind);
MultisetKind kind_from_name(std::string_view name);

/// A multiset of compositions with positive multiplicities, tagged with the
/// length n of the underlying string and the flavor of multiset it is.
class CompositionMultiset {
public:
    CompositionMultiset() = default;
    CompositionMultiset(int n, MultisetKind kind) : n_(n), kind_(kind) {}

    void add(const Composition& c, long long mult = 1);
    /// Removes `mult` copies; throws std::invalid_argument if not present.
    void remove(const Composition& c, long long mult = 1);
    long long multiplicity(const Composition& c) const;
    bool contains(const Composition& c) const { return multiplicity(c) > 0; }

    long long total() const;
    int n() const { return n_; }
    MultisetKind kind() const { return kind_; }

    const std::map<Composition, long long>& entries() const { return entries_; }

    /// (weight, multiplicity) pairs of all compositions of a given length.
    std::vector<std::pair<int, long long>> weights_at_length(int len) const;

    /// Multiset inclusion: every entry of `other` occurs here with at least
    /// the same multiplicity.
    bool includes(const CompositionMultiset& other) const;

    bool operator==(const CompositionMultiset& o) const {
        return n_ == o.n_ && kind_ == o.kind_ && entries_ == o.entries_;
    }

    /// Canonical serialization, usable as an exact grouping key.
    std::string fingerprint() const;

private:
    int n_ = 0;
    MultisetKind kind_ = MultisetKind::prefix_suffix;
    std::map<Composition, long long> entries_;
};

/// Canonical M(s): compositions of all prefixes and suffixes, with the full
/// composition counted once; total multiplicity 2n-1.
CompositionMultiset prefix_suffix_multiset(const BinaryString& s);
/// C(s): compositions of all substrings; total n(n+1)/2.
CompositionMultiset full_multiset(const BinaryString& s);
/// C_l(s): compositions of the length-l windows; total n-l+1.
CompositionMultiset length_l_multiset(const BinaryString& s, int l);
/// C_{<=r}(s) = C_1(s) u ... u C_r(s).
CompositionMultiset length_limited_multiset(const BinaryString& s, int r);

/// Accepts the 2n-entry convention (full composition listed twice) and
/// canonicalizes it to 2n-1 entries. Leaves canonical inputs untouched.
CompositionMultiset normalize_prefix_suffix(const CompositionMultiset& m);

/// The prefix weight sequence a_0..a_n (a_i = wt(s_1^i)); coefficient-free
/// form of the generating polynomial P_s(x,y).
struct WeightProfile {
    std::vector<int> a;

    int n() const { return static_cast<int>(a.size()) - 1; }
    int weight() const { return a.back(); }
    bool valid() const;
};

WeightProfile weight_profile(const BinaryString& s);
/// Profile of the reversed string: a'_i = w - a_{n-i}.
WeightProfile reciprocal(const WeightProfile& p);
/// Inverse of weight_profile. Throws std::invalid_argument if the step
/// invariant a_i - a_{i-1} in {0,1} fails.
BinaryString string_from_profile(const WeightProfile& p);

/// M(s) == M(t), decided via termwise multiset equality of the profiles of
/// s and t with their reciprocals. Throws on length mismatch.
bool equivalent(const BinaryString& s, const BinaryString& t);

}  // namespace polyrec
