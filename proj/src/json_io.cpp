#include "stabrep/json_io.hpp"

#include <stdexcept>

namespace stabrep {

using nlohmann::json;

json json_from_mpz(const mpz_class& z) {
    if (z.fits_slong_p()) return json(static_cast<long>(z.get_si()));
    return json(z.get_str());  // decimal string beyond native range
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

namespace {

std::string vertex_name(const Diagram& d, int v) {
    if (d.is_top(v)) return "t" + std::to_string(v);
    return "b" + std::to_string(v - d.n_top);
}

int vertex_from_name(const std::string& s, int n_top, int n_bot) {
    if (s.size() < 2 || (s[0] != 't' && s[0] != 'b'))
        throw std::invalid_argument("vertex names look like \"t0\" or \"b0\": " + s);
    int idx;
    try {
        size_t pos = 0;
        idx = std::stoi(s.substr(1), &pos);
        if (pos != s.size() - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex name: " + s);
    }
    int limit = (s[0] == 't') ? n_top : n_bot;
    if (idx < 0 || idx >= limit) throw std::invalid_argument("vertex out of range: " + s);
    return (s[0] == 't') ? idx : n_top + idx;
}

}  // namespace

json diagram_to_json(const Diagram& d) {
    json out;
    out["kind"] = kind_name(d.kind);
    out["top"] = d.n_top;
    out["bot"] = d.n_bot;
    if (d.kind == DiagKind::walled_brauer) out["wall"] = d.wall;
    json blocks = json::array();
    for (const auto& blk : d.blocks) {
        json b = json::array();
        for (int v : blk) b.push_back(vertex_name(d, v));
        blocks.push_back(std::move(b));
    }
    out["blocks"] = std::move(blocks);
    if (d.kind == DiagKind::signed_brauer) {
        // Canonical orientation: horizontal edges run from the lower to the
        // higher vertex; the sign field carries the accumulated flips.
        json orient = json::array();
        for (const auto& blk : d.blocks)
            orient.push_back(json::array({vertex_name(d, blk[0]), vertex_name(d, blk[1])}));
        out["orient"] = std::move(orient);
        out["sign"] = d.sign;
    }
    return out;
}

Diagram diagram_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("diagram must be a JSON object");
    DiagKind kind = kind_from_name(j.at("kind").get<std::string>());
    int n_top = j.at("top").get<int>();
    int n_bot = j.at("bot").get<int>();
    int wall = j.value("wall", 0);
    int sign = j.value("sign", 1);

    if (kind == DiagKind::signed_brauer) {
        if (!j.contains("orient"))
            throw std::invalid_argument("signed diagrams need an \"orient\" field");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("orient")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("orient entries are [from, to] pairs");
            edges.emplace_back(vertex_from_name(e[0].get<std::string>(), n_top, n_bot),
                               vertex_from_name(e[1].get<std::string>(), n_top, n_bot));
        }
        Diagram d = make_signed_diagram(n_top, n_bot, std::move(edges), sign);
        if (j.contains("blocks")) {
            // When both fields appear they must describe the same matching.
            Diagram check = make_diagram(DiagKind::brauer, n_top, n_bot, 0, [&] {
                std::vector<std::vector<int>> blocks;
                for (const auto& blk : j.at("blocks")) {
                    std::vector<int> b;
                    for (const auto& v : blk)
                        b.push_back(vertex_from_name(v.get<std::string>(), n_top, n_bot));
                    blocks.push_back(std::move(b));
                }
                return blocks;
            }());
            if (check.blocks != d.blocks)
                throw std::invalid_argument("blocks and orient fields disagree");
        }
        return d;
    }

    if (sign != 1) throw std::invalid_argument("only signed diagrams carry a sign");
    if (j.contains("orient"))
        throw std::invalid_argument("only signed diagrams carry orientations");
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j.at("blocks")) {
        std::vector<int> b;
        for (const auto& v : blk)
            b.push_back(vertex_from_name(v.get<std::string>(), n_top, n_bot));
        blocks.push_back(std::move(b));
    }
    return make_diagram(kind, n_top, n_bot, wall, std::move(blocks));
}

json label_to_json(const Label& x) {
    json out = json::array();
    out.push_back(partition_to_string(x.lam));
    if (!x.lam2.empty()) out.push_back(partition_to_string(x.lam2));
    return out;
}

Label label_from_json(KCat cat, const json& j) {
    if (!j.is_array() || j.empty() || j.size() > 2)
        throw std::invalid_argument("labels are arrays of one or two partition strings");
    Label out;
    out.lam = parse_partition(j[0].get<std::string>());
    if (j.size() == 2) out.lam2 = parse_partition(j[1].get<std::string>());
    if (cat != KCat::gl && !out.lam2.empty())
        throw std::invalid_argument("only gl labels carry a second partition");
    return out;
}

json kclass_to_json(const KClass& x) {
    json out;
    out["cat"] = kcat_name(x.cat);
    json terms = json::array();
    for (const auto& [l, c] : x.terms) {
        json t;
        t["label"] = x.cat == KCat::gl
                         ? json::array({partition_to_string(l.lam),
                                        partition_to_string(l.lam2)})
                         : json::array({partition_to_string(l.lam)});
        t["mult"] = json_from_mpz(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

KClass kclass_from_json(const json& j) {
    KClass out = kclass_zero(kcat_from_name(j.at("cat").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        Label l = label_from_json(out.cat, t.at("label"));
        mpz_class c = mpz_from_json(t.at("mult"));
        if (c != 0) out.terms[l] += c;
    }
    return out;
}

json pairs_to_json(KCat cat, const LabelPairMap& m) {
    json out;
    out["cat"] = kcat_name(cat);
    json terms = json::array();
    auto side = [&](const Label& l) {
        return cat == KCat::gl
                   ? json::array(
                         {partition_to_string(l.lam), partition_to_string(l.lam2)})
                   : json::array({partition_to_string(l.lam)});
    };
    for (const auto& [pair, c] : m) {
        json t;
        t["left"] = side(pair.first);
        t["right"] = side(pair.second);
        t["mult"] = json_from_mpz(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

json finite_class_to_json(const FiniteClass& x) {
    json out;
    out["group"] = fin_group_name(x.group);
    out["rank"] = x.rank;
    json terms = json::array();
    for (const auto& [w, c] : x.terms) {
        json t;
        t["weight"] = w;
        t["mult"] = json_from_mpz(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

json graph_to_json(const LabeledGraph& g) {
    json out;
    out["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& [u, v, lam] : g.edges)
        edges.push_back(json::array({u, v, partition_to_string(lam)}));
    out["edges"] = std::move(edges);
    return out;
}

LabeledGraph graph_from_json(const json& j) {
    LabeledGraph g;
    g.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("edges are [i, j, \"partition\"] triples");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>(),
                             parse_partition(e[2].get<std::string>()));
    }
    return g;
}

}  // namespace stabrep
