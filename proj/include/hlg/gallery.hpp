#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hlg/apartment.hpp"

namespace hlg {

struct GalleryType {
    std::vector<EdgeType> edges;

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const GalleryType& a, const GalleryType& b) { return a.edges == b.edges; }
};

/// V_0 ⊂ E_0 ⊃ V_1 ⊂ … ⊃ V_{r+1}.
struct Gallery {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    GalleryType gtype;

    const Vertex& source() const { return vertices.front(); }
    const Vertex& target() const { return vertices.back(); }
    std::size_t size() const { return edges.size(); }
    RootVec direction(std::size_t i) const { return edges[i].direction(); }

    friend bool operator==(const Gallery& a, const Gallery& b) {
        return a.vertices == b.vertices && a.gtype == b.gtype;
    }
    friend bool operator<(const Gallery& a, const Gallery& b) { return a.vertices < b.vertices; }
};

inline Gallery empty_gallery(const RootSystem& rs) {
    Gallery g;
    g.vertices.push_back(RootVec(rs.dim()));
    return g;
}

/// Appends an edge of the given type and displacement.
inline void push_edge(Gallery& g, const EdgeType& t, const RootVec& dir) {
    Vertex s = g.vertices.back();
    Vertex e = s + dir;
    g.edges.push_back(Edge{s, e, t});
    g.vertices.push_back(e);
    g.gtype.edges.push_back(t);
}

/// g1 * g2, with g2 displaced so that its source sits at the target of g1.
inline Gallery concatenate(const Gallery& g1, const Gallery& g2) {
    Gallery g = g1;
    for (const auto& e : g2.edges) push_edge(g, e.etype, e.direction());
    return g;
}

/// Subdivision of [0, ω_i] by the walls meeting the open segment.
inline Gallery gamma_omega(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw DomainError("gamma_omega: index out of range");
    const RootVec& w = rs.fundamental_coweight(i);
    std::vector<Rat> cuts;
    for (const auto& a : rs.positive_roots()) {
        Rat p = dot(a, w);
        for (std::int64_t k = 1; Rat(k) < p; ++k) cuts.push_back(Rat(k) / p);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Gallery g = empty_gallery(rs);
    if (cuts.empty()) {
        push_edge(g, EdgeType{i, Segment::Whole}, w);
    } else if (cuts.size() == 1 && cuts[0] == Rat(1, 2)) {
        push_edge(g, EdgeType{i, Segment::FirstHalf}, Rat(1, 2) * w);
        push_edge(g, EdgeType{i, Segment::SecondHalf}, Rat(1, 2) * w);
    } else {
        throw ConfigError("gamma_omega: unsupported subdivision of omega_" + std::to_string(i));
    }
    return g;
}

/// γ_λ for λ = Σ a_i ω_i: a_1 copies of γ_{ω_1}, then a_2 copies of γ_{ω_2}, ...
inline Gallery gamma_lambda(const RootSystem& rs, const std::vector<std::int64_t>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("gamma_lambda: expected " + std::to_string(rs.rank()) + " coefficients");
    Gallery g = empty_gallery(rs);
    for (int i = 1; i <= rs.rank(); ++i) {
        if (coeffs[i - 1] < 0) throw DomainError("gamma_lambda: lambda is not dominant");
        Gallery block = gamma_omega(rs, i);
        for (std::int64_t k = 0; k < coeffs[i - 1]; ++k) g = concatenate(g, block);
    }
    return g;
}

inline std::vector<std::int64_t> dominant_coefficients(const RootSystem& rs, const RootVec& lambda) {
    std::vector<std::int64_t> c;
    for (const auto& x : rs.coweight_coordinates(lambda)) {
        if (!is_integer(x)) throw DomainError("not a coweight: " + lambda.str());
        if (x < 0) throw DomainError("not dominant: " + lambda.str());
        c.push_back(x.numerator());
    }
    return c;
}

inline Gallery gamma_lambda_of(const RootSystem& rs, const RootVec& lambda) {
    return gamma_lambda(rs, dominant_coefficients(rs, lambda));
}

/// Depth-first enumeration of all galleries of a type with source 0; choices at each
/// vertex are the W_V-orbit of a reference germ, visited in lexicographic order.
class GalleryEnumerator {
public:
    GalleryEnumerator(const RootSystem& rs, GalleryType t) : rs_(&rs), type_(std::move(t)) {}

    std::optional<Gallery> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            current_ = empty_gallery(*rs_);
            descend();
            return current_;
        }
        while (!levels_.empty()) {
            Level& lv = levels_.back();
            pop_edge();
            if (++lv.idx < lv.orbit.size()) {
                push_edge(current_, type_.edges[levels_.size() - 1], lv.orbit[lv.idx]);
                descend();
                return current_;
            }
            levels_.pop_back();
        }
        done_ = true;
        return std::nullopt;
    }

private:
    struct Level {
        std::vector<RootVec> orbit;
        std::size_t idx = 0;
    };

    RootVec reference(std::size_t i) const {
        const EdgeType& t = type_.edges[i];
        const RootVec& w = rs_->fundamental_coweight(t.fundamental_index);
        if (t.segment == Segment::SecondHalf) return current_.edges.back().direction();
        return t.scale() * w;
    }

    void descend() {
        while (levels_.size() < type_.size()) {
            std::size_t i = levels_.size();
            Level lv;
            lv.orbit = local_root_system(*rs_, current_.vertices.back()).orbit(reference(i));
            push_edge(current_, type_.edges[i], lv.orbit[0]);
            levels_.push_back(std::move(lv));
        }
    }

    void pop_edge() {
        current_.edges.pop_back();
        current_.vertices.pop_back();
        current_.gtype.edges.pop_back();
    }

    const RootSystem* rs_;
    GalleryType type_;
    Gallery current_;
    std::vector<Level> levels_;
    bool started_ = false, done_ = false;
};

inline std::vector<Gallery> enumerate_of_type(const RootSystem& rs, const GalleryType& t) {
    std::vector<Gallery> out;
    GalleryEnumerator en(rs, t);
    while (auto g = en.next()) out.push_back(std::move(*g));
    return out;
}

/// Π_i |W_{V_i}·d_i| along the standard gallery of the type.
inline std::size_t count_of_type(const RootSystem& rs, const Gallery& standard) {
    std::size_t n = 1;
    for (const auto& e : standard.edges) n *= local_root_system(rs, e.start).orbit(e.direction()).size();
    return n;
}

struct CrossingCounts {
    int sharp_plus = 0;
    int sharp_minus = 0;
    int sharp_pm = 0;
};

/// (♯⁺, ♯⁻) at one pair (V, E) with direction d.
inline std::pair<int, int> local_crossings(const RootSystem& rs, const Vertex& v, const RootVec& d) {
    int p = 0, m = 0;
    for (const auto& a : rs.positive_roots()) {
        if (!is_integer(dot(a, v))) continue;
        Rat s = dot(a, d);
        if (s > 0) ++p;
        else if (s < 0) ++m;
    }
    return {p, m};
}

inline CrossingCounts crossing_counts(const RootSystem& rs, const Gallery& g) {
    CrossingCounts c;
    for (const auto& e : g.edges) {
        auto [p, m] = local_crossings(rs, e.start, e.direction());
        c.sharp_plus += p;
        c.sharp_minus += m;
    }
    c.sharp_pm = c.sharp_plus + c.sharp_minus;
    return c;
}

/// Σ_i |Φᵃ₋(V_i, E_i)|.
inline int cell_dimension(const RootSystem& rs, const Gallery& g) {
    int n = 0;
    for (const auto& e : g.edges) n += static_cast<int>(phi_a_minus(rs, e.start, e).size());
    return n;
}

/// Edgewise image w(g).
inline Gallery transform(const RootSystem& rs, WeylIndex w, const Gallery& g) {
    Gallery out = empty_gallery(rs);
    for (const auto& e : g.edges) push_edge(out, e.etype, rs.act(w, e.direction()));
    return out;
}

}  // namespace hlg
