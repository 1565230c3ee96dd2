// serialization.hpp -- JSON wire formats for multisets.
//
// Binary multiset file: {"n": int, "kind": str, "entries": [{"len","wt","mult"}...]}
// with entries sorted by (len, wt). Q-ary multiset file: {"n": int, "q": int,
// "kind": str, "entries": [{"counts": [c0..c_{q-1}], "mult": m}...]}.

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "polyrec/bits.hpp"

namespace polyrec {

std::string multiset_to_json(const CompositionMultiset& m);
CompositionMultiset multiset_from_json(const std::string& text);
CompositionMultiset multiset_from_stream(std::istream& in);

using QaryComposition = std::vector<int>;
using QaryMultiset = std::map<QaryComposition, long long>;

std::string qary_multiset_to_json(const QaryMultiset& m, int n, int q, const std::string& kind);
/// Returns the multiset; n/q/kind are written through the out-parameters.
QaryMultiset qary_multiset_from_json(const std::string& text, int& n, int& q, std::string& kind);

}  // namespace polyrec
