#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hlg/folding.hpp"
#include "hlg/qpoly.hpp"

namespace hlg {

/// Chamber u·Δ₀ of the residue at a vertex, Δ₀ being the germ of V + C⁻.
struct LocalChamber {
    Vertex base_vertex;
    WeylIndex element = 0;
};

struct ClosestChamber {
    WeylIndex element = 0;
    std::vector<int> word;
};

/// Minimal u ∈ W_V with d in the closure of u·Δ₀, with its lexicographically least reduced word.
inline ClosestChamber closest_chamber_word(const LocalRootSystem& loc, const RootVec& d) {
    if (d.is_zero()) throw DomainError("closest_chamber_word: zero direction");
    const RootSystem& rs = loc.root_system();
    std::optional<WeylIndex> best;
    for (WeylIndex u : loc.elements()) {
        RootVec x = rs.act(rs.inverse(u), d);
        bool in = true;
        for (const auto& b : loc.positive_roots())
            if (dot(b, x) > 0) {
                in = false;
                break;
            }
        if (in && (!best || loc.length(u) < loc.length(*best))) best = u;
    }
    if (!best) throw DomainError("closest_chamber_word: no local chamber contains the direction");
    return {*best, loc.reduced_word(*best)};
}

inline ClosestChamber closest_chamber_word(const RootSystem& rs, const Vertex& v, const RootVec& d) {
    return closest_chamber_word(LocalRootSystem(rs, v), d);
}

/// Every reduced word of u in the local simple reflections, lexicographically sorted.
inline std::vector<std::vector<int>> all_reduced_words(const LocalRootSystem& loc, WeylIndex u) {
    const RootSystem& rs = loc.root_system();
    const int len = loc.length(u);
    if (len == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i < loc.local_rank(); ++i) {
        WeylIndex su = rs.mul(loc.simple_reflection(i), u);
        if (loc.length(su) >= len) continue;
        for (auto& w : all_reduced_words(loc, su)) {
            w.insert(w.begin(), i);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Step { Cross, Fold };

struct ChamberGallery {
    Vertex base_vertex;
    WeylIndex sector_class = 0;
    std::vector<int> word;
    std::vector<Step> choices;
    /// x_0 = id, …, x_r; chamber C_k = x_k·Δ₀.
    std::vector<WeylIndex> chambers;
    /// γ_k = x_{k−1}(α_{i_k}), the root of the wall met at step k.
    std::vector<RootVec> wall_roots;
};

inline ChamberGallery build_chamber_gallery(const LocalRootSystem& loc, WeylIndex sector,
                                            const std::vector<int>& word, const std::vector<Step>& choices) {
    const RootSystem& rs = loc.root_system();
    ChamberGallery cg;
    cg.base_vertex = loc.vertex();
    cg.sector_class = sector;
    cg.word = word;
    cg.choices = choices;
    WeylIndex x = rs.identity();
    cg.chambers.push_back(x);
    for (std::size_t k = 0; k < word.size(); ++k) {
        cg.wall_roots.push_back(rs.act(x, loc.simple_roots().at(static_cast<std::size_t>(word[k]))));
        if (choices[k] == Step::Cross) x = rs.mul(x, loc.simple_reflection(word[k]));
        cg.chambers.push_back(x);
    }
    return cg;
}

namespace detail {
/// Do the generic points of the sector germ and of chamber C_{k−1} lie on opposite sides of wall k?
inline bool wall_separates_sector(const RootSystem& rs, const ChamberGallery& cg, std::size_t k) {
    const RootVec ps = rs.act(cg.sector_class, rs.generic());
    const RootVec pc = rs.act(cg.chambers[k], -rs.generic());
    return sign(dot(cg.wall_roots[k], ps)) != sign(dot(cg.wall_roots[k], pc));
}
}  // namespace detail

/// Every fold happens on a wall separating the sector germ from the repeated chamber.
inline bool is_positively_folded(const RootSystem& rs, const ChamberGallery& cg) {
    for (std::size_t k = 0; k < cg.word.size(); ++k)
        if (cg.choices[k] == Step::Fold && !detail::wall_separates_sector(rs, cg, k)) return false;
    return true;
}

struct CellStats {
    int t = 0;
    int r = 0;
};

/// r = folds; t = crossings leaving the side of the sector germ.
inline CellStats stats(const RootSystem& rs, const ChamberGallery& cg) {
    CellStats s;
    for (std::size_t k = 0; k < cg.word.size(); ++k) {
        if (cg.choices[k] == Step::Fold) ++s.r;
        else if (!detail::wall_separates_sector(rs, cg, k)) ++s.t;
    }
    return s;
}

struct JunctionFactorInput {
    Vertex vertex;
    RootVec incoming;  // V_{j−1} − V_j
    RootVec outgoing;  // V_{j+1} − V_j
    WeylIndex sector = 0;
};

/// Classes w with d_in ∈ w C̄⁺ such that a germ of the outgoing type lies in −w C̄⁺;
/// ordered by length, then reduced word.
inline std::vector<WeylIndex> valid_sectors(const RootSystem& rs, const Vertex& v, const RootVec& d_in,
                                            const RootVec& d_out) {
    LocalRootSystem loc(rs, v);
    std::set<WeylIndex> opp;
    for (const auto& d : loc.orbit(d_out))
        for (WeylIndex w : rs.chamber_classes_of_direction(-d)) opp.insert(w);
    std::vector<WeylIndex> out;
    for (WeylIndex w : rs.chamber_classes_of_direction(d_in))
        if (opp.count(w)) out.push_back(w);
    std::sort(out.begin(), out.end(), [&](WeylIndex a, WeylIndex b) { return rs.word_order_less(a, b); });
    return out;
}

inline WeylIndex choose_sector(const RootSystem& rs, const Vertex& v, const RootVec& d_in, const RootVec& d_out) {
    auto s = valid_sectors(rs, v, d_in, d_out);
    if (s.empty()) throw DomainError("choose_sector: no valid sector at " + v.str());
    return s.front();
}

/// Γ⁺(i, op) over the given (or the lexicographically least) reduced word of w_D.
inline std::vector<ChamberGallery> enumerate_gamma_plus_op(const RootSystem& rs, const JunctionFactorInput& in,
                                                           const std::optional<std::vector<int>>& word = {}) {
    LocalRootSystem loc(rs, in.vertex);
    ClosestChamber cc = closest_chamber_word(loc, in.outgoing);
    std::vector<int> w = word ? *word : cc.word;
    if (w.size() != cc.word.size() || loc.from_word(w) != cc.element)
        throw DomainError("enumerate_gamma_plus_op: word is not a reduced word of w_D");
    const RootVec d0 = rs.act(rs.inverse(cc.element), in.outgoing);
    const std::size_t r = w.size();
    std::vector<ChamberGallery> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        std::vector<Step> choices(r);
        for (std::size_t k = 0; k < r; ++k) choices[k] = (mask >> (r - 1 - k)) & 1 ? Step::Fold : Step::Cross;
        ChamberGallery cg = build_chamber_gallery(loc, in.sector, w, choices);
        if (!is_positively_folded(rs, cg)) continue;
        const RootVec face = rs.act(cg.chambers.back(), d0);
        if (is_minimal_pair(rs, in.incoming, face)) out.push_back(std::move(cg));
    }
    return out;
}

/// Σ_c q^{t(c)} (q − 1)^{r(c)}.
inline QPoly junction_factor(const RootSystem& rs, const JunctionFactorInput& in,
                             const std::optional<std::vector<int>>& word = {}) {
    QPoly f;
    for (const auto& cg : enumerate_gamma_plus_op(rs, in, word)) {
        CellStats s = stats(rs, cg);
        f += QPoly::cell(s.t, s.r);
    }
    return f;
}

/// Junction data for the interior vertex V_j (1 ≤ j ≤ r) of a gallery.
inline JunctionFactorInput junction_input(const RootSystem& rs, const Gallery& g, std::size_t j) {
    JunctionFactorInput in;
    in.vertex = g.vertices[j];
    in.incoming = g.vertices[j - 1] - g.vertices[j];
    in.outgoing = g.direction(j);
    in.sector = choose_sector(rs, in.vertex, in.incoming, in.outgoing);
    return in;
}

}  // namespace hlg
