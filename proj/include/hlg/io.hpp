#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hlg/gallery.hpp"
#include "hlg/hlengine.hpp"
#include "hlg/tableaux.hpp"

namespace hlg {

using json = nlohmann::json;

inline json to_json(const RootVec& v) { return json(v.to_strings()); }

inline RootVec rootvec_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an array of rational strings");
    return RootVec::from_strings(j.get<std::vector<std::string>>());
}

inline json to_json(const EdgeType& t) { return json{{"omega", t.fundamental_index}, {"segment", segment_name(t.segment)}}; }

inline EdgeType edge_type_from_json(const json& j) {
    return EdgeType{j.at("omega").get<int>(), parse_segment(j.at("segment").get<std::string>())};
}

inline json to_json(const Gallery& g) {
    json verts = json::array(), edges = json::array();
    for (const auto& v : g.vertices) verts.push_back(to_json(v));
    for (const auto& t : g.gtype.edges) edges.push_back(to_json(t));
    return json{{"vertices", verts}, {"edges", edges}};
}

inline Gallery gallery_from_json(const json& j) {
    Gallery g;
    for (const auto& v : j.at("vertices")) g.vertices.push_back(rootvec_from_json(v));
    const auto& edges = j.at("edges");
    if (g.vertices.empty() || edges.size() + 1 != g.vertices.size())
        throw DomainError("gallery json: vertex/edge count mismatch");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        EdgeType t = edge_type_from_json(edges[i]);
        g.edges.push_back(Edge{g.vertices[i], g.vertices[i + 1], t});
        g.gtype.edges.push_back(t);
    }
    return g;
}

inline json to_json(const QPoly& p) { return json{{"coeffs", p.coeffs()}}; }

inline QPoly qpoly_from_json(const json& j) { return QPoly(j.at("coeffs").get<std::vector<std::int64_t>>()); }

inline json to_json(const FormalCharacter& ch) {
    json out = json::array();
    for (const auto& [w, m] : ch) out.push_back(json{{"weight", to_json(w)}, {"mult", m}});
    return out;
}

inline FormalCharacter character_from_json(const json& j) {
    FormalCharacter ch;
    for (const auto& e : j) ch[rootvec_from_json(e.at("weight"))] = e.at("mult").get<std::int64_t>();
    return ch;
}

inline json to_json(const Tableau& t) { return json(t.columns); }

inline Tableau tableau_from_json(const RootSystem& rs, const json& j) {
    return Tableau{rs.family(), rs.rank(), j.get<std::vector<Column>>()};
}

}  // namespace hlg
