#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hlg/rootdata.hpp"

namespace hlg {

/// Affine function x ↦ ⟨α, x⟩ + level.
struct AffineRoot {
    RootVec root;
    std::int64_t level = 0;

    Rat eval(const RootVec& x) const { return dot(root, x) + Rat(level); }
    friend bool operator==(const AffineRoot& a, const AffineRoot& b) { return a.level == b.level && a.root == b.root; }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.level < b.level;
    }
};

using Vertex = RootVec;

enum class Segment { Whole, FirstHalf, SecondHalf };

inline const char* segment_name(Segment s) {
    switch (s) {
        case Segment::Whole: return "whole";
        case Segment::FirstHalf: return "first_half";
        default: return "second_half";
    }
}
inline Segment parse_segment(const std::string& s) {
    if (s == "whole") return Segment::Whole;
    if (s == "first_half") return Segment::FirstHalf;
    if (s == "second_half") return Segment::SecondHalf;
    throw DomainError("unknown segment tag '" + s + "'");
}

struct EdgeType {
    int fundamental_index = 1;
    Segment segment = Segment::Whole;

    Rat scale() const { return segment == Segment::Whole ? Rat(1) : Rat(1, 2); }
    friend bool operator==(const EdgeType& a, const EdgeType& b) {
        return a.fundamental_index == b.fundamental_index && a.segment == b.segment;
    }
    friend bool operator!=(const EdgeType& a, const EdgeType& b) { return !(a == b); }
    friend bool operator<(const EdgeType& a, const EdgeType& b) {
        if (a.fundamental_index != b.fundamental_index) return a.fundamental_index < b.fundamental_index;
        return static_cast<int>(a.segment) < static_cast<int>(b.segment);
    }
};

struct Edge {
    Vertex start;
    Vertex end;
    EdgeType etype;

    RootVec direction() const { return end - start; }
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.start == b.start && a.end == b.end && a.etype == b.etype;
    }
};

/// V + w C̄⁺.
struct Sector {
    Vertex vertex;
    WeylIndex chamber_class = 0;
};

inline bool contains_edge(const RootSystem& rs, const Sector& s, const Edge& e) {
    if (e.start != s.vertex) return false;
    RootVec x = rs.act(rs.inverse(s.chamber_class), e.direction());
    for (const auto& a : rs.simple_roots()) if (dot(a, x) < 0) return false;
    return true;
}

inline bool is_special(const RootSystem& rs, const Vertex& v) {
    for (const auto& a : rs.positive_roots()) if (!is_integer(dot(a, v))) return false;
    return true;
}

/// Rank of a set of rational vectors.
inline int vector_rank(std::vector<RootVec> rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].numerator() == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c].numerator() == 0) continue;
            Rat f = rows[r][c] / rows[rank][c];
            rows[r] -= f * rows[rank];
        }
        ++rank;
    }
    return rank;
}

/// Φ_V, Φ_V⁺, its base, and the local Weyl group W_V ⊂ W with local lengths.
class LocalRootSystem {
public:
    LocalRootSystem(const RootSystem& rs, Vertex v) : rs_(&rs), vertex_(std::move(v)) {
        for (const auto& a : rs.roots())
            if (is_integer(dot(a, vertex_))) roots_.push_back(a);
        for (const auto& a : rs.positive_roots())
            if (is_integer(dot(a, vertex_))) positive_.push_back(a);
        local_len_.assign(rs.order(), -1);
        for (const auto& a : positive_) {
            WeylIndex s = rs.reflection(a);
            if (raw_length(s) == 1) {
                simple_.push_back(a);
                simple_refl_.push_back(s);
            }
        }
        // Closure under the local simple reflections.
        std::vector<WeylIndex> frontier{rs.identity()};
        local_len_[rs.identity()] = 0;
        elements_.push_back(rs.identity());
        while (!frontier.empty()) {
            std::vector<WeylIndex> next;
            for (WeylIndex u : frontier)
                for (WeylIndex s : simple_refl_) {
                    WeylIndex su = rs.mul(s, u);
                    if (local_len_[su] < 0) {
                        local_len_[su] = raw_length(su);
                        elements_.push_back(su);
                        next.push_back(su);
                    }
                }
            frontier = std::move(next);
        }
        std::sort(elements_.begin(), elements_.end());
    }

    const RootSystem& root_system() const { return *rs_; }
    const Vertex& vertex() const { return vertex_; }
    const std::vector<RootVec>& roots() const { return roots_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    const std::vector<RootVec>& simple_roots() const { return simple_; }
    WeylIndex simple_reflection(int i) const { return simple_refl_.at(static_cast<std::size_t>(i)); }
    int local_rank() const { return static_cast<int>(simple_.size()); }
    const std::vector<WeylIndex>& elements() const { return elements_; }
    bool contains(WeylIndex w) const { return local_len_[w] >= 0; }
    bool is_special() const { return roots_.size() == rs_->roots().size(); }

    int length(WeylIndex u) const {
        if (!contains(u)) throw DomainError("element not in the local Weyl group");
        return local_len_[u];
    }

    /// Lexicographically least reduced word in the local simple reflections.
    std::vector<int> reduced_word(WeylIndex u) const {
        std::vector<int> word;
        int len = length(u);
        while (len > 0) {
            for (int i = 0; i < local_rank(); ++i) {
                WeylIndex su = rs_->mul(simple_refl_[i], u);
                if (local_len_[su] < len) {
                    word.push_back(i);
                    u = su;
                    len = local_len_[su];
                    break;
                }
            }
        }
        return word;
    }
    WeylIndex from_word(const std::vector<int>& word) const {
        WeylIndex u = rs_->identity();
        for (int i : word) u = rs_->mul(u, simple_refl_.at(static_cast<std::size_t>(i)));
        return u;
    }

    /// Sorted, deduplicated W_V-orbit of a direction.
    std::vector<RootVec> orbit(const RootVec& d) const {
        std::set<RootVec> s;
        for (WeylIndex u : elements_) s.insert(rs_->act(u, d));
        return {s.begin(), s.end()};
    }

private:
    int raw_length(WeylIndex u) const {
        WeylIndex ui = rs_->inverse(u);
        int len = 0;
        for (const auto& b : positive_)
            if (!rs_->is_positive_root(rs_->act(ui, b))) ++len;
        return len;
    }

    const RootSystem* rs_;
    Vertex vertex_;
    std::vector<RootVec> roots_, positive_, simple_;
    std::vector<WeylIndex> simple_refl_, elements_;
    std::vector<int> local_len_;
};

inline LocalRootSystem local_root_system(const RootSystem& rs, const Vertex& v) { return LocalRootSystem(rs, v); }

enum class CrossingSign { Positive, Negative, None };

/// Sign with which E (starting at V) leaves the wall h through V.
inline CrossingSign crossing_sign(const RootSystem& rs, const Vertex& v, const Edge& e, const AffineRoot& h) {
    if (e.start != v) throw DomainError("crossing_sign: edge does not start at the vertex");
    if (!rs.is_positive_root(h.root)) throw DomainError("crossing_sign: wall root must be positive");
    if (h.eval(v).numerator() != 0) return CrossingSign::None;
    Rat s = dot(h.root, e.direction());
    if (s > 0) return CrossingSign::Positive;
    if (s < 0) return CrossingSign::Negative;
    return CrossingSign::None;
}

/// {(α,n) : α < 0, V ∈ H_{α,n}, E ⊄ H⁺_{α,n}}.
inline std::vector<AffineRoot> phi_a_minus(const RootSystem& rs, const Vertex& v, const Edge& e) {
    if (e.start != v) throw DomainError("phi_a_minus: edge does not start at the vertex");
    std::vector<AffineRoot> out;
    RootVec d = e.direction();
    for (const auto& a : rs.roots()) {
        if (rs.is_positive_root(a)) continue;
        Rat p = dot(a, v);
        if (!is_integer(p)) continue;
        if (dot(a, d) < 0) out.push_back(AffineRoot{a, -p.numerator()});
    }
    return out;
}

/// Edge displacement of type t at V must be c·w(ω_i) with the right endpoint kinds.
inline void check_edge_type(const RootSystem& rs, const Vertex& v, const EdgeType& t, const RootVec& dir) {
    const int i = t.fundamental_index;
    if (i < 1 || i > rs.rank()) throw DomainError("edge type: fundamental index out of range");
    const bool minus = rs.is_minuscule(i);
    if ((t.segment == Segment::Whole) != minus)
        throw DomainError("edge type: segment tag does not match minusculeness of omega_" + std::to_string(i));
    RootVec full = (Rat(1) / t.scale()) * dir;
    if (rs.canonical(rs.dominant_conjugate(full)) != rs.canonical(rs.fundamental_coweight(i)))
        throw DomainError("edge type: direction is not in the orbit of omega_" + std::to_string(i));
    const bool start_special = is_special(rs, v);
    const bool end_special = is_special(rs, v + dir);
    const bool ok = t.segment == Segment::Whole       ? (start_special && end_special)
                    : t.segment == Segment::FirstHalf ? (start_special && !end_special)
                                                      : (!start_special && end_special);
    if (!ok) throw DomainError("edge type: endpoint kinds inconsistent with segment tag");
}

/// W_V-orbit of a same-type reference germ at V.
inline std::vector<RootVec> faces_at_vertex_of_type(const RootSystem& rs, const Vertex& v, const EdgeType& t,
                                                    const RootVec& reference_direction) {
    check_edge_type(rs, v, t, reference_direction);
    return local_root_system(rs, v).orbit(reference_direction);
}

/// The open segment meets only walls containing it, and it spans a 1-dimensional face.
inline bool is_face_edge(const RootSystem& rs, const Vertex& a, const Vertex& b) {
    if (a == b) return false;
    std::vector<RootVec> containing;
    for (const auto& r : rs.positive_roots()) {
        Rat x = dot(r, a), y = dot(r, b);
        if (x == y) {
            if (is_integer(x)) containing.push_back(r);
            continue;
        }
        Rat lo = x < y ? x : y, hi = x < y ? y : x;
        // any integer strictly inside (lo, hi)?
        if (Rat(floor_rat(lo) + 1) < hi) return false;
    }
    return vector_rank(containing) == rs.rank() - 1;
}

/// Endpoints of the W^a-translate of [a,b] whose midpoint lies in the closed fundamental alcove, oriented.
inline std::pair<RootVec, RootVec> alcove_representative(const RootSystem& rs, RootVec a, RootVec b) {
    const RootVec& theta = rs.highest_root();
    const RootVec theta_c = RootSystem::coroot(theta);
    for (;;) {
        RootVec m = Rat(1, 2) * (a + b);
        bool moved = false;
        for (const auto& s : rs.simple_roots()) {
            Rat p = dot(s, m);
            if (p < 0) {
                RootVec sc = RootSystem::coroot(s);
                a -= dot(s, a) * sc;
                b -= dot(s, b) * sc;
                moved = true;
                break;
            }
        }
        if (moved) continue;
        if (dot(theta, m) > 1) {
            a -= (dot(theta, a) - 1) * theta_c;
            b -= (dot(theta, b) - 1) * theta_c;
            continue;
        }
        break;
    }
    a = rs.canonical(a);
    b = rs.canonical(b);
    return {a, b};
}

}  // namespace hlg
