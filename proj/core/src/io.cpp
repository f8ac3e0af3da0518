#include "platdiag/io.hpp"

#include <map>
#include <set>
#include <sstream>

namespace pd {

using nlohmann::json;

json to_json(const Word& w) {
    json letters = json::array();
    for (const Letter& l : w.letters())
        letters.push_back({{"kind", l.kind == Gen::Sigma ? "s" : l.kind == Gen::Alpha ? "a" : "b"},
                           {"index", l.index},
                           {"exponent", l.exp}});
    return {{"g", w.context().g}, {"n", w.context().n}, {"letters", std::move(letters)}};
}

Word word_from_json(const json& j) {
    try {
        Context c{j.at("g").get<int>(), j.at("n").get<int>()};
        std::vector<Letter> v;
        for (const auto& x : j.at("letters")) {
            std::string k = x.at("kind").get<std::string>();
            Gen g;
            if (k == "a") g = Gen::Alpha;
            else if (k == "b") g = Gen::Beta;
            else if (k == "s") g = Gen::Sigma;
            else throw InputError("bad letter kind '" + k + "'");
            v.push_back({g, x.at("index").get<int>(), x.at("exponent").get<std::int64_t>()});
        }
        return Word(c, std::move(v));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad word record: ") + e.what());
    }
}

json to_json(const HomologyResult& h) {
    json t = json::array();
    for (auto& x : h.torsion) t.push_back(x.str());
    return {{"free_rank", h.free_rank}, {"torsion", std::move(t)}, {"text", to_string(h)}};
}

namespace {

std::string dname(const DunwoodyDiagram& D, int slot) {
    return (D.lower(slot) ? "D" : "U") + std::to_string(D.disk(slot) + 1);
}

std::string tname(const TakahashiDiagram& D, int slot) {
    const int g = 2 * D.t.n, dk = D.disk_of(slot);
    return (dk < g ? "U" : "D") + std::to_string(dk % g + 1);
}

const char* dkind(DArc a) {
    switch (a) {
        case DArc::AU: return "upper";
        case DArc::AL: return "lower";
        case DArc::B: return "diagonal";
        case DArc::C: return "vertical";
    }
    return "?";
}

template <class Diag, class Name, class Kind>
json diagram_json(const Diag& D, Name name, Kind kind, int ndisks, json params) {
    const auto& G = D.graph;
    json disks = json::array();
    std::map<std::string, json> labels;
    for (int x = 0; x < G.size(); ++x) labels[name(D, x)].push_back(D.label(x));
    for (auto& [k, v] : labels) disks.push_back({{"disk", k}, {"labels", v}});
    json arcs = json::array();
    for (int x = 0; x < G.size(); ++x) {
        int y = G.across[x];
        if (y < x) continue;
        arcs.push_back({{"type", kind(D.rec[x])},
                        {"read", to_string(D.rec[x])},
                        {"from", {{"disk", name(D, x)}, {"label", D.label(x)}}},
                        {"to", {{"disk", name(D, y)}, {"label", D.label(y)}}}});
    }
    return {{"params", std::move(params)}, {"disk_count", ndisks}, {"disks", std::move(disks)}, {"arcs", std::move(arcs)}};
}

template <class Diag, class Name>
std::string diagram_dot(const Diag& D, Name name, const std::string& title) {
    const auto& G = D.graph;
    std::ostringstream o;
    o << "graph \"" << title << "\" {\n  node [shape=circle];\n";
    std::set<std::string> nodes;
    for (int x = 0; x < G.size(); ++x) nodes.insert(name(D, x));
    for (auto& nm : nodes) o << "  " << nm << ";\n";
    for (int x = 0; x < G.size(); ++x) {
        int y = G.across[x];
        if (y < x) continue;
        o << "  " << name(D, x) << " -- " << name(D, y) << " [label=\"" << to_string(D.rec[x]) << " "
          << D.label(x) << ":" << D.label(y) << "\"];\n";
    }
    std::set<std::pair<std::string, std::string>> glued;
    for (int x = 0; x < G.size(); ++x) {
        auto a = name(D, x), b = name(D, G.glue[x]);
        if (a < b) glued.insert({a, b});
    }
    for (auto& [a, b] : glued) o << "  " << a << " -- " << b << " [style=dashed, color=gray];\n";
    o << "}\n";
    return o.str();
}

}  // namespace

json to_json(const DunwoodyDiagram& d) {
    const auto& t = d.t;
    json p = {{"family", "dunwoody"}, {"a", t.a}, {"b", t.b}, {"c", t.c}, {"n", t.n}, {"r", t.r}, {"s", t.s}, {"d", t.d()}};
    return diagram_json(d, dname, [](const DArcRef& a) { return std::string(dkind(a.type)); }, 2 * t.n, p);
}

json to_json(const TakahashiDiagram& d) {
    const auto& t = d.t;
    json p = {{"family", "takahashi"}, {"n", t.n}, {"p", t.p}, {"q", t.q}, {"r", t.r}, {"s", t.s},
              {"case", case_name(t.tag())}};
    auto kind = [](const TArcRef& a) {
        static const char* nm[] = {"AU", "AL", "B", "C", "F", "G", "X", "Y"};
        return std::string(nm[static_cast<int>(a.type)]);
    };
    return diagram_json(d, tname, kind, 4 * t.n, p);
}

std::string to_dot(const DunwoodyDiagram& d) { return diagram_dot(d, dname, "M(" + d.t.str() + ")"); }

std::string to_dot(const TakahashiDiagram& d) { return diagram_dot(d, tname, d.t.str()); }

}  // namespace pd
