#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "hlg/gallery.hpp"

namespace hlg {

using DefiningChain = std::vector<WeylIndex>;

/// ∃ w: dE ∈ w(C̄⁺) and dF ∈ −w(C̄⁺).
inline bool is_minimal_pair(const RootSystem& rs, const RootVec& dE, const RootVec& dF) {
    if (dE.is_zero() || dF.is_zero()) throw DomainError("is_minimal_pair: zero direction");
    auto a = rs.chamber_classes_of_direction(dE);
    auto b = rs.chamber_classes_of_direction(-dF);
    std::vector<WeylIndex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return !both.empty();
}

/// Directions reachable from the minimal partners of d_in inside the W_V-orbit of d_out
/// by reflections moving the germ away from C⁻(V).
inline std::set<RootVec> positive_fold_closure(const RootSystem& rs, const LocalRootSystem& loc, const RootVec& d_in,
                                               const RootVec& d_out) {
    std::set<RootVec> seen;
    std::deque<RootVec> queue;
    for (const auto& d : loc.orbit(d_out))
        if (is_minimal_pair(rs, d_in, d)) {
            seen.insert(d);
            queue.push_back(d);
        }
    while (!queue.empty()) {
        RootVec d = queue.front();
        queue.pop_front();
        for (const auto& b : loc.positive_roots()) {
            Rat p = dot(b, d);
            if (p >= 0) continue;
            RootVec nd = d - p * RootSystem::coroot(b);
            if (seen.insert(nd).second) queue.push_back(nd);
        }
    }
    return seen;
}

/// Local positive folding at V with incoming germ d_in = V_prev − V and outgoing germ d_out.
inline bool two_step_pf(const RootSystem& rs, const Vertex& v, const RootVec& d_in, const RootVec& d_out) {
    LocalRootSystem loc(rs, v);
    return positive_fold_closure(rs, loc, d_in, d_out).count(d_out) > 0;
}

inline bool two_step_positively_folded(const RootSystem& rs, const Edge& e, const Vertex& v, const Edge& f) {
    if (e.end != v || f.start != v) throw DomainError("two_step_positively_folded: edges do not meet at the vertex");
    return two_step_pf(rs, v, e.start - v, f.direction());
}

inline bool locally_positively_folded(const RootSystem& rs, const Gallery& g) {
    for (std::size_t j = 1; j < g.edges.size(); ++j)
        if (!two_step_positively_folded(rs, g.edges[j - 1], g.vertices[j], g.edges[j])) return false;
    return true;
}

/// Bruhat-maximal element, ties by lexicographic reduced word.
inline WeylIndex bruhat_max(const RootSystem& rs, const std::vector<WeylIndex>& s) {
    WeylIndex best = s.front();
    for (WeylIndex w : s) {
        if (rs.length(w) > rs.length(best) ||
            (rs.length(w) == rs.length(best) && rs.reduced_word(w) < rs.reduced_word(best)))
            best = w;
    }
    return best;
}

inline std::optional<DefiningChain> defining_chain(const RootSystem& rs, const Gallery& g) {
    const std::size_t r = g.edges.size();
    if (r == 0) return DefiningChain{};
    std::vector<std::vector<WeylIndex>> reach(r);
    reach[0] = rs.chamber_classes_of_direction(g.direction(0));
    for (std::size_t i = 1; i < r; ++i) {
        for (WeylIndex t : rs.chamber_classes_of_direction(g.direction(i))) {
            for (WeylIndex p : reach[i - 1])
                if (rs.bruhat_leq(t, p)) {
                    reach[i].push_back(t);
                    break;
                }
        }
        if (reach[i].empty()) return std::nullopt;
    }
    DefiningChain chain(r);
    chain[r - 1] = bruhat_max(rs, reach[r - 1]);
    for (std::size_t i = r - 1; i-- > 0;) {
        std::vector<WeylIndex> lifts;
        for (WeylIndex p : reach[i])
            if (rs.bruhat_leq(chain[i + 1], p)) lifts.push_back(p);
        chain[i] = bruhat_max(rs, lifts);
    }
    return chain;
}

inline bool is_positively_folded(const RootSystem& rs, const Gallery& g) {
    return locally_positively_folded(rs, g) && defining_chain(rs, g).has_value();
}

inline bool is_minimal(const RootSystem& rs, const Gallery& g) {
    if (g.edges.empty()) return true;
    auto common = rs.chamber_classes_of_direction(g.direction(0));
    for (std::size_t i = 1; i < g.edges.size() && !common.empty(); ++i) {
        auto c = rs.chamber_classes_of_direction(g.direction(i));
        std::vector<WeylIndex> both;
        std::set_intersection(common.begin(), common.end(), c.begin(), c.end(), std::back_inserter(both));
        common = std::move(both);
    }
    return !common.empty();
}

/// λ with t = type of γ_λ.
inline RootVec type_weight(const RootSystem& rs, const GalleryType& t) {
    RootVec l(rs.dim());
    for (const auto& e : t.edges) l += e.scale() * rs.fundamental_coweight(e.fundamental_index);
    return l;
}

/// ♯⁺δ = ⟨λ + μ, ρ⟩ with μ the target.
inline bool is_LS(const RootSystem& rs, const Gallery& g) {
    if (!is_positively_folded(rs, g)) throw DomainError("is_LS: gallery is not positively folded");
    RootVec lambda = type_weight(rs, g.gtype);
    return Rat(crossing_counts(rs, g).sharp_plus) == dot(lambda + g.target(), rs.rho());
}

/// #{α > 0 : ⟨α, x⟩ < 0}: length of the minimal coset representative taking the dominant conjugate to x.
inline int coset_length(const RootSystem& rs, const RootVec& x) {
    int n = 0;
    for (const auto& a : rs.positive_roots()) if (dot(a, x) < 0) ++n;
    return n;
}

/// For a gallery of type γ_ω: can it be produced from the unfolded gallery by LS-folds only?
inline bool ls_fold_check(const RootSystem& rs, const Gallery& g) {
    const auto& t = g.gtype.edges;
    const bool single = (t.size() == 1 && t[0].segment == Segment::Whole) ||
                        (t.size() == 2 && t[0].segment == Segment::FirstHalf &&
                         t[1].segment == Segment::SecondHalf && t[0].fundamental_index == t[1].fundamental_index);
    if (!single) throw DomainError("ls_fold_check: gallery is not of a fundamental type");
    if (!is_positively_folded(rs, g)) throw DomainError("ls_fold_check: gallery is not positively folded");
    if (t.size() == 1) return true;
    const Vertex& v1 = g.vertices[1];
    LocalRootSystem loc(rs, v1);
    const RootVec start = Rat(2) * g.direction(0);
    const RootVec goal = Rat(2) * g.direction(1);
    std::set<RootVec> seen{start};
    std::deque<RootVec> queue{start};
    while (!queue.empty()) {
        RootVec x = queue.front();
        queue.pop_front();
        if (x == goal) return true;
        const int len = coset_length(rs, x);
        for (const auto& b : loc.positive_roots()) {
            Rat p = dot(b, x);
            if (p >= 0) continue;
            RootVec y = x - p * RootSystem::coroot(b);
            if (coset_length(rs, y) != len - 1) continue;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return false;
}

/// Γ⁺(γ_λ, μ).
inline std::vector<Gallery> enumerate_pf(const RootSystem& rs, const std::vector<std::int64_t>& lambda,
                                         const RootVec& mu) {
    Gallery std_g = gamma_lambda(rs, lambda);
    if (!rs.is_dominant(mu) || !rs.is_coweight(mu)) throw DomainError("enumerate_pf: mu must be a dominant coweight");
    const RootVec m = rs.canonical(mu);
    std::vector<Gallery> out;
    GalleryEnumerator en(rs, std_g.gtype);
    while (auto g = en.next())
        if (rs.canonical(g->target()) == m && is_positively_folded(rs, *g)) out.push_back(std::move(*g));
    return out;
}

}  // namespace hlg
