#include "polyrec/serialization.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

namespace polyrec {

using nlohmann::json;

std::string multiset_to_json(const CompositionMultiset& m) {
    json entries = json::array();
    for (const auto& [c, mult] : m.entries())
        entries.push_back({{"len", c.len}, {"wt", c.wt}, {"mult", mult}});
    json j{{"n", m.n()}, {"kind", kind_name(m.kind())}, {"entries", entries}};
    return j.dump(2);
}

CompositionMultiset multiset_from_json(const std::string& text) {
    json j = json::parse(text);
    CompositionMultiset m(j.at("n").get<int>(), kind_from_name(j.at("kind").get<std::string>()));
    for (const auto& e : j.at("entries"))
        m.add({e.at("len").get<int>(), e.at("wt").get<int>()}, e.at("mult").get<long long>());
    return m;
}

CompositionMultiset multiset_from_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return multiset_from_json(buf.str());
}

std::string qary_multiset_to_json(const QaryMultiset& m, int n, int q, const std::string& kind) {
    json entries = json::array();
    for (const auto& [counts, mult] : m)
        entries.push_back({{"counts", counts}, {"mult", mult}});
    json j{{"n", n}, {"q", q}, {"kind", kind}, {"entries", entries}};
    return j.dump(2);
}

QaryMultiset qary_multiset_from_json(const std::string& text, int& n, int& q, std::string& kind) {
    json j = json::parse(text);
    n = j.at("n").get<int>();
    q = j.at("q").get<int>();
    kind = j.at("kind").get<std::string>();
    QaryMultiset m;
    for (const auto& e : j.at("entries")) {
        QaryComposition counts = e.at("counts").get<std::vector<int>>();
        if (static_cast<int>(counts.size()) != q)
            throw std::invalid_argument("qary multiset: counts size != q");
        m[counts] += e.at("mult").get<long long>();
    }
    return m;
}

}  // namespace polyrec
