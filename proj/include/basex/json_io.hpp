#pragma once

#include <json.hpp>

#include "basex/ideal.hpp"
#include "basex/sweep.hpp"

namespace basex {

using Json = nlohmann::ordered_json;

/// Parses "0,1,4" into a sorted base. Empty string = empty base.
inline Base parse_base_string(const std::string& s) {
    Base b;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            b.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid edge id '" + tok + "'");
        }
        pos = next + 1;
    }
    std::sort(b.begin(), b.end());
    return b;
}

/// Parses "0,1;2,3" into a list of bases.
inline std::vector<Base> parse_tuple_string(const std::string& s) {
    std::vector<Base> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(';', pos);
        std::string part =
            next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        out.push_back(parse_base_string(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

/// Edge-list echo, 1-based vertex ids as in the input format.
inline Json graph_json(const MultiGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back({u + 1, v + 1});
    return Json{{"vertices", g.vertex_count}, {"edges", edges}};
}

inline Json stats_json(const ExchangeGraph& xg) {
    return Json{{"vertices", static_cast<int>(xg.vertices.size())},
                {"edges", static_cast<long long>(xg.edge_count())},
                {"connected", is_connected(xg)},
                {"components", component_count(xg)}};
}

inline Json tuple_json(const std::vector<Base>& bases) {
    Json arr = Json::array();
    for (const Base& b : bases) arr.push_back(base_to_string(b));
    return arr;
}

inline Json kpath_json(const MultiGraph& g, int k, const KPath& path) {
    Json steps = Json::array();
    for (const KTuple& t : path.tuples) steps.push_back(tuple_json(t.bases));
    Json witnesses = Json::array();
    for (const Base& w : path.witnesses) witnesses.push_back(base_to_string(w));
    return Json{{"graph", graph_json(g)}, {"k", k}, {"path", steps}, {"witnesses", witnesses}};
}

inline Json pair_path_json(const MultiGraph& g, const PairPath& path) {
    Json steps = Json::array();
    for (const OrderedPair& p : path.pairs)
        steps.push_back(tuple_json({p.first, p.second}));
    Json witnesses = Json::array();
    for (const PairPath::Swap& s : path.swaps)
        witnesses.push_back(Json{{"out", s.out}, {"in", s.in}});
    return Json{{"graph", graph_json(g)}, {"k", 2}, {"path", steps}, {"witnesses", witnesses}};
}

inline Json certificate_json(const QuadricCertificate& cert) {
    Json terms = Json::array();
    for (const CertTerm& t : cert.terms) {
        terms.push_back(
            Json{{"sign", t.sign},
                 {"cofactor", tuple_json(t.cofactor)},
                 {"quadric",
                  Json{{"lhs", tuple_json({t.quadric.lhs[0], t.quadric.lhs[1]})},
                       {"rhs", tuple_json({t.quadric.rhs[0], t.quadric.rhs[1]})},
                       {"swap", Json{{"out", t.quadric.swap_out}, {"in", t.quadric.swap_in}}}}}});
    }
    return Json{{"binomial",
                 Json{{"lhs", tuple_json(cert.binomial.lhs)}, {"rhs", tuple_json(cert.binomial.rhs)}}},
                {"terms", terms}};
}

inline QuadricCertificate certificate_from_json(const Json& j) {
    QuadricCertificate cert;
    auto read_monomial = [](const Json& arr) {
        BaseMonomial m;
        for (const auto& s : arr) m.push_back(parse_base_string(s.get<std::string>()));
        return m;
    };
    cert.binomial.lhs = read_monomial(j.at("binomial").at("lhs"));
    cert.binomial.rhs = read_monomial(j.at("binomial").at("rhs"));
    for (const auto& tj : j.at("terms")) {
        CertTerm t;
        t.sign = tj.at("sign").get<int>();
        t.cofactor = read_monomial(tj.at("cofactor"));
        auto ql = read_monomial(tj.at("quadric").at("lhs"));
        auto qr = read_monomial(tj.at("quadric").at("rhs"));
        if (ql.size() != 2 || qr.size() != 2)
            throw std::invalid_argument("certificate quadric must have two factors per side");
        t.quadric.lhs = {ql[0], ql[1]};
        t.quadric.rhs = {qr[0], qr[1]};
        t.quadric.swap_out = tj.at("quadric").at("swap").at("out").get<int>();
        t.quadric.swap_in = tj.at("quadric").at("swap").at("in").get<int>();
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

inline Json sweep_json(const SweepSummary& s) {
    Json fails = Json::array();
    for (const auto& f : s.failure_samples) fails.push_back(f);
    return Json{{"mode", s.mode},          {"max_edges", s.max_edges},
                {"k", s.k},                {"up_to_iso", s.up_to_iso},
                {"graphs", s.graphs},      {"instances", s.instances},
                {"failures", s.failures},  {"failure_samples", fails}};
}

}  // namespace basex
