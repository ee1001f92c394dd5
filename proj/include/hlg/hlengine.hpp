#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hlg/parallel.hpp"
#include "hlg/residue.hpp"

namespace hlg {

/// Weight multiplicities keyed by canonical coweight.
using FormalCharacter = std::map<RootVec, std::int64_t>;

/// ℓ(w_{D₀}) for the first edge, computed at the origin where W_V = W.
inline int first_factor_exponent(const RootSystem& rs, const Gallery& g) {
    if (g.edges.empty()) return 0;
    return static_cast<int>(closest_chamber_word(rs, g.source(), g.direction(0)).word.size());
}

/// q^{ℓ(w_{D₀})} Π_j junction_factor_j for a positively folded gallery.
inline QPoly gallery_contribution(const RootSystem& rs, const Gallery& g) {
    QPoly p = QPoly::monomial(first_factor_exponent(rs, g));
    for (std::size_t j = 1; j < g.edges.size() && !p.is_zero(); ++j) p *= junction_factor(rs, junction_input(rs, g, j));
    return p;
}

/// All galleries of type γ_λ.
inline std::vector<Gallery> galleries_of_lambda(const RootSystem& rs, const std::vector<std::int64_t>& lambda) {
    return enumerate_of_type(rs, gamma_lambda(rs, lambda).gtype);
}

/// L_{λ,μ} for every dominant μ reached by a positively folded gallery.
inline std::map<RootVec, QPoly> L_by_target(const RootSystem& rs, const std::vector<std::int64_t>& lambda,
                                            unsigned jobs = 1) {
    std::vector<Gallery> pf;
    for (auto& g : galleries_of_lambda(rs, lambda))
        if (rs.is_dominant(g.target()) && is_positively_folded(rs, g)) pf.push_back(std::move(g));
    auto parts = parallel_map(pf.size(), jobs, [&](std::size_t i) { return gallery_contribution(rs, pf[i]); });
    std::map<RootVec, QPoly> out;
    for (std::size_t i = 0; i < pf.size(); ++i) out[rs.canonical(pf[i].target())] += parts[i];
    return out;
}

inline QPoly L_polynomial(const RootSystem& rs, const std::vector<std::int64_t>& lambda,
                          const std::vector<std::int64_t>& mu, unsigned jobs = 1) {
    RootVec m = rs.to_ambient(mu);
    for (auto c : mu)
        if (c < 0) throw DomainError("L_polynomial: mu is not dominant");
    auto pf = enumerate_pf(rs, lambda, m);
    auto parts = parallel_map(pf.size(), jobs, [&](std::size_t i) { return gallery_contribution(rs, pf[i]); });
    QPoly sum;
    for (const auto& p : parts) sum += p;
    return sum;
}

/// Σ over LS-galleries of type γ_λ of e^{target}.
inline FormalCharacter character_LS(const RootSystem& rs, const std::vector<std::int64_t>& lambda) {
    FormalCharacter ch;
    for (const auto& g : galleries_of_lambda(rs, lambda))
        if (is_positively_folded(rs, g) && is_LS(rs, g)) ++ch[rs.canonical(g.target())];
    return ch;
}

}  // namespace hlg
