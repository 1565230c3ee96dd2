#include "polyrec/bits.hpp"

#include <algorithm>
#include <sstream>

namespace polyrec {

BinaryString::BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw std::invalid_argument("BinaryString: symbol not in {0,1}");
}

BinaryString BinaryString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("BinaryString::parse: expected 0/1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryString(std::move(bits));
}

BinaryString BinaryString::zeros(int n) { return BinaryString(std::vector<std::uint8_t>(n, 0)); }
BinaryString BinaryString::ones(int n) { return BinaryString(std::vector<std::uint8_t>(n, 1)); }

BinaryString BinaryString::from_index(std::uint64_t value, int n) {
    std::vector<std::uint8_t> bits(n);
    for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1u);
    return BinaryString(std::move(bits));
}

void BinaryString::push_back(std::uint8_t b) {
    if (b > 1) throw std::invalid_argument("BinaryString: symbol not in {0,1}");
    bits_.push_back(b);
}

void BinaryString::append(const BinaryString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BinaryString BinaryString::reversed() const {
    std::vector<std::uint8_t> rev(bits_.rbegin(), bits_.rend());
    return BinaryString(std::move(rev));
}

BinaryString BinaryString::substr(int pos, int len) const {
    if (pos < 0 || len < 0 || pos + len > size())
        throw std::out_of_range("BinaryString::substr");
    return BinaryString(std::vector<std::uint8_t>(bits_.begin() + pos, bits_.begin() + pos + len));
}

int BinaryString::weight() const {
    int w = 0;
    for (auto b : bits_) w += b;
    return w;
}

int BinaryString::prefix_weight(int j) const {
    if (j < 0 || j > size()) throw std::out_of_range("prefix_weight");
    int w = 0;
    for (int i = 0; i < j; ++i) w += bits_[i];
    return w;
}

int BinaryString::suffix_weight(int j) const {
    if (j < 0 || j > size()) throw std::out_of_range("suffix_weight");
    int w = 0;
    for (int i = size() - j; i < size(); ++i) w += bits_[i];
    return w;
}

std::string BinaryString::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

BinaryString operator+(const BinaryString& a, const BinaryString& b) {
    BinaryString r = a;
    r.append(b);
    return r;
}

std::string Composition::str() const {
    if (len == 0) return "e";
    std::ostringstream os;
    int zeros = len - wt;
    if (zeros > 0) os << "0^" << zeros;
    if (zeros > 0 && wt > 0) os << "*";
    if (wt > 0) os << "1^" << wt;
    return os.str();
}

Composition Composition::parse(std::string_view text) {
    if (text == "e") return {0, 0};
    int zeros = 0, ones = 0;
    std::size_t pos = 0;
    auto read_run = [&](char symbol) -> int {
        if (pos + 1 >= text.size() || text[pos] != symbol || text[pos + 1] != '^')
            throw std::invalid_argument("Composition::parse: bad format");
        pos += 2;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Composition::parse: missing exponent");
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    if (pos < text.size() && text[pos] == '0') zeros = read_run('0');
    if (pos < text.size() && text[pos] == '*') ++pos;
    if (pos < text.size() && text[pos] == '1') ones = read_run('1');
    if (pos != text.size() || (zeros == 0 && ones == 0))
        throw std::invalid_argument("Composition::parse: bad format");
    return {zeros + ones, ones};
}

Composition composition(const BinaryString& s) { return {s.size(), s.weight()}; }

std::string kind_name(MultisetKind kind) {
    switch (kind) {
        case MultisetKind::prefix_suffix: return "prefix-suffix";
        case MultisetKind::full: return "full";
        case MultisetKind::length_l: return "length-l";
        case MultisetKind::length_limited: return "length-limited";
    }
    return "?";
}

MultisetKind kind_from_name(std::string_view name) {
    if (name == "prefix-suffix" || name == "ps") return MultisetKind::prefix_suffix;
    if (name == "full") return MultisetKind::full;
    if (name == "length-l") return MultisetKind::length_l;
    if (name == "length-limited") return MultisetKind::length_limited;
    throw std::invalid_argument("unknown multiset kind: " + std::string(name));
}

void CompositionMultiset::add(const Composition& c, long long mult) {
    if (mult <= 0) throw std::invalid_argument("CompositionMultiset::add: multiplicity must be positive");
    entries_[c] += mult;
}

void CompositionMultiset::remove(const Composition& c, long long mult) {
    auto it = entries_.find(c);
    if (it == entries_.end() || it->second < mult)
        throw std::invalid_argument("CompositionMultiset::remove: " + c.str() + " not present");
    it->second -= mult;
    if (it->second == 0) entries_.erase(it);
}

long long CompositionMultiset::multiplicity(const Composition& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
}

long long CompositionMultiset::total() const {
    long long t = 0;
    for (const auto& [c, m] : entries_) t += m;
    return t;
}

std::vector<std::pair<int, long long>> CompositionMultiset::weights_at_length(int len) const {
    std::vector<std::pair<int, long long>> out;
    for (auto it = entries_.lower_bound({len, 0}); it != entries_.end() && it->first.len == len; ++it)
        out.emplace_back(it->first.wt, it->second);
    return out;
}

bool CompositionMultiset::includes(const CompositionMultiset& other) const {
    for (const auto& [c, m] : other.entries())
        if (multiplicity(c) < m) return false;
    return true;
}

std::string CompositionMultiset::fingerprint() const {
    std::ostringstream os;
    os << n_ << '|' << kind_name(kind_) << '|';
    for (const auto& [c, m] : entries_) os << c.len << ',' << c.wt << ':' << m << ';';
    return os.str();
}

CompositionMultiset prefix_suffix_multiset(const BinaryString& s) {
    const int n = s.size();
    if (n < 1) throw std::invalid_argument("prefix_suffix_multiset: empty string");
    CompositionMultiset m(n, MultisetKind::prefix_suffix);
    for (int j = 1; j <= n; ++j) m.add({j, s.prefix_weight(j)});
    for (int j = 1; j <= n - 1; ++j) m.add({j, s.suffix_weight(j)});
    return m;
}

CompositionMultiset full_multiset(const BinaryString& s) {
    const int n = s.size();
    CompositionMultiset m(n, MultisetKind::full);
    for (int i = 0; i < n; ++i) {
        int w = 0;
        for (int j = i; j < n; ++j) {
            w += s[j];
            m.add({j - i + 1, w});
        }
    }
    return m;
}

CompositionMultiset length_l_multiset(const BinaryString& s, int l) {
    const int n = s.size();
    if (l < 1 || l > n) throw std::invalid_argument("length_l_multiset: l out of range");
    CompositionMultiset m(n, MultisetKind::length_l);
    int w = s.prefix_weight(l);
    m.add({l, w});
    for (int i = 1; i + l <= n; ++i) {
        w += s[i + l - 1] - s[i - 1];
        m.add({l, w});
    }
    return m;
}

CompositionMultiset length_limited_multiset(const BinaryString& s, int r) {
    const int n = s.size();
    if (r < 1 || r > n) throw std::invalid_argument("length_limited_multiset: r out of range");
    CompositionMultiset m(n, MultisetKind::length_limited);
    for (int l = 1; l <= r; ++l)
        for (const auto& [c, mult] : length_l_multiset(s, l).entries()) m.add(c, mult);
    return m;
}

CompositionMultiset normalize_prefix_suffix(const CompositionMultiset& m) {
    if (m.kind() != MultisetKind::prefix_suffix) return m;
    const int n = m.n();
    if (m.total() != 2LL * n) return m;
    auto at_n = m.weights_at_length(n);
    if (at_n.size() != 1 || at_n[0].second != 2) return m;
    CompositionMultiset out = m;
    out.remove({n, at_n[0].first});
    return out;
}

bool WeightProfile::valid() const {
    if (a.empty() || a[0] != 0) return false;
    for (std::size_t i = 1; i < a.size(); ++i) {
        int step = a[i] - a[i - 1];
        if (step != 0 && step != 1) return false;
    }
    return true;
}

WeightProfile weight_profile(const BinaryString& s) {
    WeightProfile p;
    p.a.resize(s.size() + 1);
    p.a[0] = 0;
    for (int i = 0; i < s.size(); ++i) p.a[i + 1] = p.a[i] + s[i];
    return p;
}

WeightProfile reciprocal(const WeightProfile& p) {
    const int n = p.n();
    const int w = p.weight();
    WeightProfile q;
    q.a.resize(n + 1);
    for (int i = 0; i <= n; ++i) q.a[i] = w - p.a[n - i];
    return q;
}

BinaryString string_from_profile(const WeightProfile& p) {
    if (!p.valid()) throw std::invalid_argument("string_from_profile: invalid profile");
    std::vector<std::uint8_t> bits(p.n());
    for (int i = 1; i <= p.n(); ++i) bits[i - 1] = static_cast<std::uint8_t>(p.a[i] - p.a[i - 1]);
    return BinaryString(std::move(bits));
}

bool equivalent(const BinaryString& s, const BinaryString& t) {
    if (s.size() != t.size()) throw std::invalid_argument("equivalent: length mismatch");
    const int n = s.size();
    const WeightProfile ps = weight_profile(s), qs = reciprocal(ps);
    const WeightProfile pt = weight_profile(t), qt = reciprocal(pt);
    for (int i = 0; i <= n; ++i) {
        int s_lo = std::min(ps.a[i], qs.a[i]), s_hi = std::max(ps.a[i], qs.a[i]);
        int t_lo = std::min(pt.a[i], qt.a[i]), t_hi = std::max(pt.a[i], qt.a[i]);
        if (s_lo != t_lo || s_hi != t_hi) return false;
    }
    return true;
}

}  // namespace polyrec
