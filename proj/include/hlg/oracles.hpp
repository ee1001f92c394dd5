#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hlg/qpoly.hpp"
#include "hlg/rootdata.hpp"

namespace hlg {

/// Laurent polynomial in x = (x_1..x_d) with coefficients in ℤ[t], t = q⁻¹.
/// Exponents are stored doubled so that half-integral coweights get integer keys.
struct LaurentMonomialMap {
    using Key = std::vector<std::int64_t>;
    std::map<Key, QPoly> terms;

    static Key key_of(const RootVec& v) {
        Key k(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat x = Rat(2) * v[i];
            if (!is_integer(x)) throw DomainError("exponent with denominator > 2: " + v.str());
            k[i] = x.numerator();
        }
        return k;
    }
    static RootVec vec_of(const Key& k) {
        RootVec v(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) v[i] = Rat(k[i], 2);
        return v;
    }

    void add(const Key& k, const QPoly& c) {
        if (c.is_zero()) return;
        QPoly& slot = terms[k];
        slot += c;
        if (slot.is_zero()) terms.erase(k);
    }
    QPoly coefficient(const RootVec& exponent) const {
        auto it = terms.find(key_of(exponent));
        return it == terms.end() ? QPoly() : it->second;
    }
};

namespace detail {

inline LaurentMonomialMap::Key shift(LaurentMonomialMap::Key k, const LaurentMonomialMap::Key& by, int s = 1) {
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += s * by[i];
    return k;
}

/// m · (1 + c·x^{−β})
inline LaurentMonomialMap times_binomial(const LaurentMonomialMap& m, const LaurentMonomialMap::Key& beta,
                                         const QPoly& c) {
    LaurentMonomialMap out;
    for (const auto& [k, v] : m.terms) {
        out.add(k, v);
        out.add(shift(k, beta, -1), v * c);
    }
    return out;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Exact quotient f / (1 − x^{−β}), computed along each β-string by suffix sums.
inline LaurentMonomialMap divide_binomial(const LaurentMonomialMap& f, const LaurentMonomialMap::Key& beta) {
    std::size_t p = 0;
    while (beta[p] == 0) ++p;
    // string base → (position j → coefficient), with e = base + j·β
    std::map<LaurentMonomialMap::Key, std::map<std::int64_t, QPoly>> strings;
    for (const auto& [k, v] : f.terms) {
        std::int64_t j = beta[p] > 0 ? floor_div(k[p], beta[p]) : -floor_div(k[p], -beta[p]);
        strings[shift(k, beta, static_cast<int>(-j))][j] = v;
    }
    LaurentMonomialMap g;
    for (const auto& [base, s] : strings) {
        QPoly run;
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
            run += it->second;
            auto nxt = std::next(it);
            const std::int64_t lo = nxt == s.rend() ? it->first : nxt->first;
            // g_j = run for lo < j ≤ it->first
            for (std::int64_t j = it->first; j > lo; --j) {
                LaurentMonomialMap::Key k = base;
                for (std::size_t i = 0; i < k.size(); ++i) k[i] += j * beta[i];
                g.add(k, run);
            }
        }
        if (!run.is_zero()) throw ConsistencyError("Hall-Littlewood oracle: non-exact division by (1 - x^-b)");
    }
    return g;
}

}  // namespace detail

/// P_λ = (1/W_λ(t)) Σ_w w( x^λ Π_{α>0} (1 − t x^{−α^∨}) / (1 − x^{−α^∨}) ).
inline LaurentMonomialMap hall_littlewood_direct(const RootSystem& rs, const RootVec& lambda) {
    if (!rs.is_dominant(lambda) || !rs.is_coweight(lambda))
        throw DomainError("hall_littlewood_direct: lambda must be a dominant coweight");
    using Key = LaurentMonomialMap::Key;
    const QPoly minus_t(std::vector<std::int64_t>{0, -1});
    const QPoly minus_one = QPoly::constant(-1);
    std::vector<Key> coroots;
    for (const auto& a : rs.positive_roots()) coroots.push_back(LaurentMonomialMap::key_of(RootSystem::coroot(a)));

    LaurentMonomialMap m;
    m.add(LaurentMonomialMap::key_of(lambda + rs.rho_check()), QPoly::constant(1));
    for (const auto& b : coroots) m = detail::times_binomial(m, b, minus_t);

    LaurentMonomialMap s;
    for (WeylIndex w = 0; w < rs.order(); ++w) {
        const auto& e = rs.element(w);
        const QPoly sgn = QPoly::constant(rs.length(w) % 2 ? -1 : 1);
        for (const auto& [k, v] : m.terms) {
            Key img(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) img[e.perm[i]] = e.sign[i] * k[i];
            s.add(img, v * sgn);
        }
    }
    for (const auto& b : coroots) s = detail::divide_binomial(s, b);

    QPoly wl;
    for (WeylIndex w = 0; w < rs.order(); ++w)
        if (rs.act(w, lambda) == lambda) wl += QPoly::monomial(rs.length(w));
    const Key shift_back = LaurentMonomialMap::key_of(rs.rho_check());
    LaurentMonomialMap out;
    for (const auto& [k, v] : s.terms) out.add(detail::shift(k, shift_back, -1), v.exact_div(wl));
    return out;
}

/// q^{⟨ρ, λ+μ⟩} · [x^μ] P_λ, as a polynomial in q.
inline QPoly L_from_direct(const RootSystem& rs, const RootVec& lambda, const RootVec& mu,
                           const LaurentMonomialMap* precomputed = nullptr) {
    if (!rs.is_dominant(mu) || !rs.is_coweight(mu)) throw DomainError("L_from_direct: mu must be a dominant coweight");
    LaurentMonomialMap local;
    if (!precomputed) {
        local = hall_littlewood_direct(rs, lambda);
        precomputed = &local;
    }
    QPoly c;
    for (const auto& [k, v] : precomputed->terms)
        if (rs.same_point(LaurentMonomialMap::vec_of(k), mu)) c += v;
    if (c.is_zero()) return {};
    Rat n = dot(rs.rho(), lambda + mu);
    if (!is_integer(n)) throw ConsistencyError("L_from_direct: non-integral <rho, lambda+mu>");
    const std::int64_t deg = n.numerator();
    if (c.degree() > deg) throw ConsistencyError("L_from_direct: residual negative power of q");
    std::vector<std::int64_t> out(static_cast<std::size_t>(deg) + 1, 0);
    for (int k = 0; k <= c.degree(); ++k) out[static_cast<std::size_t>(deg - k)] = c.coeff(k);
    return QPoly(std::move(out));
}

using OracleCharacter = std::map<RootVec, std::int64_t>;

/// Weight multiplicities of V(λ) for the algebra whose roots are the coroots α^∨.
inline OracleCharacter freudenthal_character(const RootSystem& rs, const RootVec& lambda) {
    if (!rs.is_dominant(lambda) || !rs.is_coweight(lambda))
        throw DomainError("freudenthal_character: lambda must be a dominant coweight");
    std::vector<RootVec> pos, simple;
    for (const auto& a : rs.positive_roots()) pos.push_back(RootSystem::coroot(a));
    for (const auto& a : rs.simple_roots()) simple.push_back(RootSystem::coroot(a));
    const RootVec& rho = rs.rho_check();
    const Rat top = dot(lambda + rho, lambda + rho);

    std::map<RootVec, std::int64_t> mult{{lambda, 1}};
    std::set<RootVec> level{lambda};
    while (!level.empty()) {
        std::set<RootVec> next;
        for (const auto& w : level)
            for (const auto& s : simple) next.insert(w - s);
        std::set<RootVec> kept;
        for (const auto& mu : next) {
            const Rat den = top - dot(mu + rho, mu + rho);
            if (den <= Rat(0)) continue;
            Rat num(0);
            for (const auto& a : pos) {
                for (std::int64_t k = 1;; ++k) {
                    RootVec up = mu + Rat(k) * a;
                    auto it = mult.find(up);
                    if (it == mult.end()) break;
                    num += Rat(it->second) * dot(up, a);
                }
            }
            Rat m = Rat(2) * num / den;
            if (!is_integer(m)) throw ConsistencyError("Freudenthal: non-integral multiplicity at " + mu.str());
            if (m.numerator() > 0) {
                mult[mu] = m.numerator();
                kept.insert(mu);
            }
        }
        level = std::move(kept);
    }
    OracleCharacter out;
    for (const auto& [w, m] : mult) out[rs.canonical(w)] += m;
    return out;
}

/// Π_{α>0} ⟨λ+ρ^∨, α⟩ / ⟨ρ^∨, α⟩.
inline std::int64_t weyl_dimension(const RootSystem& rs, const RootVec& lambda) {
    Rat d(1);
    for (const auto& a : rs.positive_roots()) d *= dot(lambda + rs.rho_check(), a) / dot(rs.rho_check(), a);
    if (!is_integer(d)) throw ConsistencyError("Weyl dimension is not an integer");
    return d.numerator();
}

/// K_{λμ}: semistandard tableaux of shape p_λ and content μ, via horizontal strips.
inline std::int64_t kostka(const RootSystem& rs, const std::vector<std::int64_t>& lambda, const RootVec& mu) {
    if (rs.family() != Family::A) throw DomainError("kostka: type A only");
    const int n = rs.rank();
    std::vector<std::int64_t> shape(static_cast<std::size_t>(n + 1), 0);
    for (int i = n - 1; i >= 0; --i) shape[i] = shape[i + 1] + lambda.at(static_cast<std::size_t>(i));
    std::int64_t boxes = 0;
    for (auto x : shape) boxes += x;
    Rat sum(0);
    for (std::size_t i = 0; i < mu.size(); ++i) sum += mu[i];
    const Rat k = (Rat(boxes) - sum) / Rat(n + 1);
    if (!is_integer(k)) return 0;
    std::vector<std::int64_t> content;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Rat c = mu[i] + k;
        if (!is_integer(c) || c < Rat(0)) return 0;
        content.push_back(c.numerator());
    }
    std::map<std::vector<std::int64_t>, std::int64_t> states{{std::vector<std::int64_t>(n + 1, 0), 1}};
    for (std::int64_t c : content) {
        std::map<std::vector<std::int64_t>, std::int64_t> next;
        for (const auto& [p, cnt] : states) {
            // add c boxes as a horizontal strip: new row i length in [p_i, min(shape_i, p_{i-1})]
            std::vector<std::int64_t> q(p.size());
            auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
                if (i == p.size()) {
                    if (left == 0) next[q] += cnt;
                    return;
                }
                const std::int64_t cap = std::min(shape[i], i == 0 ? shape[0] : p[i - 1]);
                for (std::int64_t v = p[i]; v <= cap && v - p[i] <= left; ++v) {
                    q[i] = v;
                    self(self, i + 1, left - (v - p[i]));
                }
            };
            rec(rec, 0, c);
        }
        states = std::move(next);
    }
    auto it = states.find(shape);
    return it == states.end() ? 0 : it->second;
}

}  // namespace hlg
