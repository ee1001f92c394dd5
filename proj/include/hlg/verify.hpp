#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hlg/hlengine.hpp"
#include "hlg/io.hpp"
#include "hlg/oracles.hpp"
#include "hlg/tableaux.hpp"

namespace hlg {

enum class Fault { None, SignFlip };

struct SuiteConfig {
    std::vector<std::string> systems{"A1", "A2", "A3", "B2", "C2", "B3", "C3"};
    int max_terms = 3;   // Σ a_i
    int max_dim = 16;    // ⟨λ, 2ρ⟩
    unsigned jobs = 1;
    Fault fault = Fault::None;
    std::uint64_t seed = 20240601;
    int random_junctions = 300;  // rank ≥ 3 spot checks for choice independence
};

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = true;
    std::size_t cases = 0;
    double seconds = 0;
    json counterexample;

    void fail(json payload) {
        if (passed) counterexample = std::move(payload);
        passed = false;
    }
    json to_json() const {
        json j{{"id", id}, {"description", description}, {"passed", passed}, {"cases", cases}, {"seconds", seconds}};
        if (!passed) j["counterexample"] = counterexample;
        return j;
    }
};

/// Everything the checks need about one (root system, λ) pair, computed once.
struct CaseData {
    const RootSystem* rs = nullptr;
    std::vector<std::int64_t> coeffs;
    RootVec lambda;
    Gallery standard;
    std::vector<Gallery> galleries;
    std::vector<char> pf, local_pf;
    std::map<RootVec, QPoly> L;  // engine values on dominant targets
    std::vector<RootVec> dominant_mus;

    json label() const {
        return json{{"type", rs->name()}, {"lambda", coeffs}};
    }
};

class Suite {
public:
    explicit Suite(SuiteConfig cfg) : cfg_(std::move(cfg)) {
        for (const auto& s : cfg_.systems) systems_.push_back(std::make_unique<RootSystem>(RootSystemSpec::parse(s)));
        for (const auto& rs : systems_) {
            std::vector<std::int64_t> a(static_cast<std::size_t>(rs->rank()), 0);
            add_lambdas(*rs, a, 0, 0);
        }
    }

    const SuiteConfig& config() const { return cfg_; }
    const std::vector<CaseData>& cases() const { return cases_; }

    /// Engine data for every case; costs one full gallery enumeration per case.
    void prepare() {
        if (prepared_) return;
        for (auto& c : cases_) {
            const RootSystem& rs = *c.rs;
            c.galleries = enumerate_of_type(rs, c.standard.gtype);
            auto flags = parallel_map(c.galleries.size(), cfg_.jobs, [&](std::size_t i) {
                const Gallery& g = c.galleries[i];
                return std::pair<char, char>(is_positively_folded(rs, g), locally_positively_folded(rs, g));
            });
            for (const auto& [p, l] : flags) {
                c.pf.push_back(p);
                c.local_pf.push_back(l);
            }
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < c.galleries.size(); ++i)
                if (c.pf[i] && rs.is_dominant(c.galleries[i].target())) idx.push_back(i);
            auto parts = parallel_map(idx.size(), cfg_.jobs,
                                      [&](std::size_t k) { return gallery_contribution(rs, c.galleries[idx[k]]); });
            for (std::size_t k = 0; k < idx.size(); ++k) c.L[rs.canonical(c.galleries[idx[k]].target())] += parts[k];
            std::set<RootVec> mus;
            for (const auto& [w, m] : freudenthal_character(rs, c.lambda))
                if (rs.is_dominant(w)) mus.insert(w);
            for (const auto& [w, p] : c.L) mus.insert(w);
            mus.insert(rs.canonical(c.lambda + rs.fundamental_coweight(1)));  // outside the support
            c.dominant_mus.assign(mus.begin(), mus.end());
        }
        prepared_ = true;
    }

private:
    void add_lambdas(const RootSystem& rs, std::vector<std::int64_t>& a, std::size_t i, int used) {
        if (i == a.size()) {
            RootVec l = rs.to_ambient(a);
            if (dot(l, Rat(2) * rs.rho()) > Rat(cfg_.max_dim)) return;
            CaseData c;
            c.rs = &rs;
            c.coeffs = a;
            c.lambda = l;
            c.standard = gamma_lambda(rs, a);
            cases_.push_back(std::move(c));
            return;
        }
        for (int k = 0; used + k <= cfg_.max_terms; ++k) {
            a[i] = k;
            add_lambdas(rs, a, i + 1, used + k);
        }
        a[i] = 0;
    }

    SuiteConfig cfg_;
    std::vector<std::unique_ptr<RootSystem>> systems_;
    std::vector<CaseData> cases_;
    bool prepared_ = false;
};

namespace detail {

template <class F>
CheckResult timed(std::string id, std::string description, F&& body) {
    CheckResult r;
    r.id = std::move(id);
    r.description = std::move(description);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.fail(json{{"exception", e.what()}});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline QPoly engine_L(const CaseData& c, const RootVec& mu, Fault fault) {
    auto it = c.L.find(mu);
    QPoly p = it == c.L.end() ? QPoly() : it->second;
    return fault == Fault::SignFlip ? -p : p;
}

inline std::map<RootVec, std::int64_t> ls_counts(const CaseData& c) {
    std::map<RootVec, std::int64_t> out;
    for (std::size_t i = 0; i < c.galleries.size(); ++i)
        if (c.pf[i] && is_LS(*c.rs, c.galleries[i])) ++out[c.rs->canonical(c.galleries[i].target())];
    return out;
}

}  // namespace detail

/// Criterion 1: the A2 worked example.
inline CheckResult check_a2_example(Fault fault = Fault::None) {
    return detail::timed("a2-example", "A2, lambda = 2w1+w2: L(lambda,lambda), L(lambda,2w2), L(lambda,w1)",
                         [&](CheckResult& r) {
        const auto t0 = std::chrono::steady_clock::now();
        RootSystem rs(RootSystemSpec::parse("A2"));
        const std::vector<std::pair<std::vector<std::int64_t>, QPoly>> expected{
            {{2, 1}, QPoly::monomial(6)},
            {{0, 2}, QPoly(std::vector<std::int64_t>{0, 0, 0, 0, -1, 1})},
            {{1, 0}, QPoly(std::vector<std::int64_t>{0, 0, 0, -2, 2})},
        };
        for (const auto& [mu, want] : expected) {
            QPoly got = L_polynomial(rs, {2, 1}, mu);
            if (fault == Fault::SignFlip) got = -got;
            ++r.cases;
            if (got != want) r.fail(json{{"mu", mu}, {"expected", want.str()}, {"got", got.str()}});
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 1.0) r.fail(json{{"reason", "runtime above 1 s"}, {"seconds", secs}});
    });
}

/// Criterion 2: engine L = direct Hall–Littlewood L.
inline CheckResult check_oracle_equivalence(Suite& s) {
    return detail::timed("oracle-equivalence", "L_polynomial equals L_from_direct for every suite (lambda, mu)",
                         [&](CheckResult& r) {
        s.prepare();
        const auto& cases = s.cases();
        auto directs = parallel_map(cases.size(), s.config().jobs,
                                    [&](std::size_t i) { return hall_littlewood_direct(*cases[i].rs, cases[i].lambda); });
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto& c = cases[i];
            for (const auto& mu : c.dominant_mus) {
                ++r.cases;
                QPoly e = detail::engine_L(c, mu, s.config().fault);
                QPoly d = L_from_direct(*c.rs, c.lambda, mu, &directs[i]);
                if (e != d) {
                    json j = c.label();
                    j["mu"] = to_json(mu);
                    j["engine"] = to_json(e);
                    j["direct"] = to_json(d);
                    r.fail(j);
                }
            }
        }
    });
}

/// Criterion 3: L(1) = [μ ∈ Wλ].
inline CheckResult check_euler(Suite& s) {
    return detail::timed("euler-characteristic", "L(1) = 1 iff mu in W.lambda, else 0", [&](CheckResult& r) {
        s.prepare();
        for (const auto& c : s.cases()) {
            const RootVec l = c.rs->canonical(c.lambda);
            for (const auto& mu : c.dominant_mus) {
                ++r.cases;
                const std::int64_t want = mu == l ? 1 : 0;
                const std::int64_t got = detail::engine_L(c, mu, s.config().fault).eval(1);
                if (got != want) {
                    json j = c.label();
                    j["mu"] = to_json(mu);
                    j["L(1)"] = got;
                    j["expected"] = want;
                    r.fail(j);
                }
            }
        }
    });
}

/// Criterion 4: LS character = Freudenthal character; mass = Weyl dimension.
inline CheckResult check_character(Suite& s) {
    return detail::timed("character", "LS-gallery character equals the Freudenthal character", [&](CheckResult& r) {
        s.prepare();
        for (const auto& c : s.cases()) {
            ++r.cases;
            FormalCharacter ls;
            for (const auto& [w, m] : detail::ls_counts(c)) ls[w] = m;
            auto fr = freudenthal_character(*c.rs, c.lambda);
            FormalCharacter frc(fr.begin(), fr.end());
            std::int64_t mass = 0;
            for (const auto& [w, m] : ls) mass += m;
            const std::int64_t dim = weyl_dimension(*c.rs, c.lambda);
            if (ls != frc || mass != dim) {
                json j = c.label();
                j["ls"] = to_json(ls);
                j["freudenthal"] = to_json(frc);
                j["weyl_dimension"] = dim;
                r.fail(j);
            }
        }
    });
}

/// Criterion 5: degree bound, leading coefficient = #LS, type A leading = Kostka.
inline CheckResult check_degree_leading(Suite& s) {
    return detail::timed("degree-leading", "deg L <= <lambda+mu,rho>, leading data from LS counts and Kostka",
                         [&](CheckResult& r) {
        s.prepare();
        for (const auto& c : s.cases()) {
            const RootSystem& rs = *c.rs;
            auto ls = detail::ls_counts(c);
            for (const auto& mu : c.dominant_mus) {
                ++r.cases;
                QPoly L = detail::engine_L(c, mu, s.config().fault);
                const std::int64_t bound = dot(c.lambda + mu, rs.rho()).numerator();
                const std::int64_t n_ls = ls.count(mu) ? ls.at(mu) : 0;
                json j = c.label();
                j["mu"] = to_json(mu);
                j["L"] = L.str();
                j["ls_count"] = n_ls;
                if (!L.is_zero() && L.degree() > bound) {
                    j["reason"] = "degree above bound";
                    r.fail(j);
                }
                if (n_ls > 0 && (L.is_zero() || L.degree() != bound || L.leading() != n_ls)) {
                    j["reason"] = "leading data differs from LS count";
                    r.fail(j);
                }
                if (rs.family() == Family::A) {
                    const std::int64_t k = kostka(rs, c.coeffs, mu);
                    const std::int64_t lead = (L.is_zero() || L.degree() != bound) ? 0 : L.leading();
                    if (k != lead) {
                        j["reason"] = "type A leading coefficient differs from Kostka";
                        j["kostka"] = k;
                        r.fail(j);
                    }
                }
            }
        }
    });
}

/// Criterion 6: crossing, minimality, LS, local/global folding and junction bridge invariants.
inline CheckResult check_combinatorial(Suite& s) {
    return detail::timed("combinatorial-invariants", "crossing counts, minimal=>LS, minuscule LS, local<=>global PF, "
                                                     "two-step PF <=> Gamma+(i,op) nonempty",
                         [&](CheckResult& r) {
        s.prepare();
        for (const auto& c : s.cases()) {
            const RootSystem& rs = *c.rs;
            const Rat two_rho = dot(c.lambda, Rat(2) * rs.rho());
            const bool single_minuscule = c.standard.size() == 1;
            const bool single_fundamental =
                c.standard.size() == 2 && c.standard.gtype.edges[0].segment == Segment::FirstHalf;
            if (c.galleries.size() != count_of_type(rs, c.standard)) {
                json j = c.label();
                j["reason"] = "gallery count differs from the orbit-size product";
                r.fail(j);
            }
            std::set<Gallery> distinct(c.galleries.begin(), c.galleries.end());
            if (distinct.size() != c.galleries.size() || !distinct.count(c.standard)) {
                json j = c.label();
                j["reason"] = "enumeration is not a set containing the standard gallery";
                r.fail(j);
            }
            for (std::size_t i = 0; i < c.galleries.size(); ++i) {
                const Gallery& g = c.galleries[i];
                ++r.cases;
                auto bad = [&](const char* why) {
                    json j = c.label();
                    j["gallery"] = to_json(g);
                    j["reason"] = why;
                    r.fail(j);
                };
                auto cc = crossing_counts(rs, g);
                if (Rat(cc.sharp_pm) != two_rho) bad("sharp_pm differs from <lambda,2rho>");
                if (cell_dimension(rs, g) != cc.sharp_plus) bad("cell dimension differs from sharp_plus");
                for (const auto& e : g.edges) {
                    if (!is_face_edge(rs, e.start, e.end)) bad("edge violates the face property");
                    if (static_cast<int>(phi_a_minus(rs, e.start, e).size()) !=
                        local_crossings(rs, e.start, e.direction()).first)
                        bad("|phi_a_minus| differs from the positive crossings");
                }
                if (static_cast<bool>(c.pf[i]) != static_cast<bool>(c.local_pf[i])) bad("local PF differs from global PF");
                const bool minimal = is_minimal(rs, g);
                if (minimal && !c.pf[i]) bad("minimal gallery is not positively folded");
                if (c.pf[i]) {
                    const bool ls = is_LS(rs, g);
                    if (minimal && !ls) bad("minimal gallery is not LS");
                    if (single_minuscule && !ls) bad("minuscule gallery is not LS");
                    if (Rat(cc.sharp_plus) > dot(c.lambda + g.target(), rs.rho())) bad("sharp_plus above <lambda+mu,rho>");
                    if (single_fundamental && ls_fold_check(rs, g) != ls) bad("LS-fold search disagrees with is_LS");
                }
                for (std::size_t j = 1; j < g.edges.size(); ++j) {
                    JunctionFactorInput in;
                    in.vertex = g.vertices[j];
                    in.incoming = g.vertices[j - 1] - g.vertices[j];
                    in.outgoing = g.direction(j);
                    in.sector = choose_sector(rs, in.vertex, in.incoming, in.outgoing);
                    const bool two = two_step_pf(rs, in.vertex, in.incoming, in.outgoing);
                    if (two != !enumerate_gamma_plus_op(rs, in).empty()) bad("two-step PF differs from Gamma+(i,op) != {}");
                }
            }
        }
    });
}

/// Criterion 7: gallery ↔ tableau bijection, semistandard ⟺ PF, type A Kostka counts.
inline CheckResult check_bijection(Suite& s) {
    return detail::timed("tableau-bijection", "gallery<->tableau round trip, semistandard <=> PF, type A Kostka",
                         [&](CheckResult& r) {
        s.prepare();
        for (const auto& c : s.cases()) {
            const RootSystem& rs = *c.rs;
            std::map<RootVec, std::int64_t> ssyt, pf_count;
            const auto shape = shape_partition(rs, c.coeffs);
            for (std::size_t i = 0; i < c.galleries.size(); ++i) {
                const Gallery& g = c.galleries[i];
                ++r.cases;
                auto bad = [&](const char* why) {
                    json j = c.label();
                    j["gallery"] = to_json(g);
                    j["reason"] = why;
                    r.fail(j);
                };
                Tableau t = gallery_to_tableau(rs, g);
                if (!(tableau_to_gallery(rs, t) == g)) bad("round trip differs");
                if (tableau_shape(t) != shape) bad("tableau shape differs from p_lambda");
                if (tableau_content(rs, t) != g.target()) bad("content differs from target");
                const bool sst = is_semistandard(t);
                if (sst != static_cast<bool>(c.pf[i])) bad("semistandard differs from positively folded");
                const RootVec m = rs.canonical(g.target());
                if (sst) ++ssyt[m];
                if (c.pf[i]) ++pf_count[m];
            }
            if (rs.family() != Family::A) continue;
            for (const auto& mu : c.dominant_mus) {
                const std::int64_t k = kostka(rs, c.coeffs, mu);
                const std::int64_t a = ssyt.count(mu) ? ssyt.at(mu) : 0;
                const std::int64_t b = pf_count.count(mu) ? pf_count.at(mu) : 0;
                if (a != k || b != k) {
                    json j = c.label();
                    j["mu"] = to_json(mu);
                    j["kostka"] = k;
                    j["ssyt"] = a;
                    j["pf_galleries"] = b;
                    r.fail(j);
                }
            }
        }
    });
}

/// Junction factor over every (valid sector, reduced word of w_D) combination.
inline std::vector<std::pair<json, QPoly>> all_junction_factors(const RootSystem& rs, const Vertex& v,
                                                                const RootVec& d_in, const RootVec& d_out) {
    std::vector<std::pair<json, QPoly>> out;
    LocalRootSystem loc(rs, v);
    ClosestChamber cc = closest_chamber_word(loc, d_out);
    for (WeylIndex w : valid_sectors(rs, v, d_in, d_out))
        for (const auto& word : all_reduced_words(loc, cc.element)) {
            JunctionFactorInput in{v, d_in, d_out, w};
            out.emplace_back(json{{"sector", rs.reduced_word(w)}, {"word", word}}, junction_factor(rs, in, word));
        }
    return out;
}

/// Criterion 8: junction factors and L independent of sector and reduced word.
inline CheckResult check_choice_independence(Suite& s) {
    return detail::timed("choice-independence", "junction factors and L invariant under sector and reduced-word choices",
                         [&](CheckResult& r) {
        s.prepare();
        std::mt19937_64 rng(s.config().seed);
        struct Site {
            const CaseData* c;
            std::size_t g, j;
        };
        std::vector<Site> rank3;
        auto check_site = [&](const CaseData& c, const Gallery& g, std::size_t j) {
            const RootSystem& rs = *c.rs;
            const RootVec d_in = g.vertices[j - 1] - g.vertices[j];
            auto all = all_junction_factors(rs, g.vertices[j], d_in, g.direction(j));
            ++r.cases;
            for (const auto& [choice, f] : all)
                if (f != all.front().second) {
                    json jj = c.label();
                    jj["gallery"] = to_json(g);
                    jj["junction"] = j;
                    jj["reference"] = json{{"choice", all.front().first}, {"factor", all.front().second.str()}};
                    jj["other"] = json{{"choice", choice}, {"factor", f.str()}};
                    r.fail(jj);
                }
            return all;
        };
        for (const auto& c : s.cases()) {
            const RootSystem& rs = *c.rs;
            if (rs.rank() > 2) {
                for (std::size_t i = 0; i < c.galleries.size(); ++i)
                    if (c.pf[i])
                        for (std::size_t j = 1; j < c.galleries[i].size(); ++j) rank3.push_back({&c, i, j});
                continue;
            }
            // Exhaustive: every junction, and L rebuilt from the last choice at each junction.
            std::map<RootVec, QPoly> alt;
            for (std::size_t i = 0; i < c.galleries.size(); ++i) {
                if (!c.pf[i]) continue;
                const Gallery& g = c.galleries[i];
                QPoly p = QPoly::monomial(first_factor_exponent(rs, g));
                for (std::size_t j = 1; j < g.size(); ++j) p *= check_site(c, g, j).back().second;
                if (rs.is_dominant(g.target())) alt[rs.canonical(g.target())] += p;
            }
            for (const auto& mu : c.dominant_mus) {
                QPoly a = alt.count(mu) ? alt.at(mu) : QPoly();
                if (a != detail::engine_L(c, mu, s.config().fault)) {
                    json jj = c.label();
                    jj["mu"] = to_json(mu);
                    jj["default_choice"] = detail::engine_L(c, mu, s.config().fault).str();
                    jj["last_choice"] = a.str();
                    r.fail(jj);
                }
            }
        }
        std::shuffle(rank3.begin(), rank3.end(), rng);
        const std::size_t n = std::min<std::size_t>(rank3.size(), static_cast<std::size_t>(s.config().random_junctions));
        for (std::size_t k = 0; k < n; ++k) {
            const auto& site = rank3[k];
            check_site(*site.c, site.c->galleries[site.g], site.j);
        }
        if (n < static_cast<std::size_t>(s.config().random_junctions) && !rank3.empty())
            r.fail(json{{"reason", "fewer rank-3 junctions than requested"}, {"available", rank3.size()}});
    });
}

inline std::vector<CheckResult> run_full_suite(Suite& s) {
    return {check_a2_example(s.config().fault), check_oracle_equivalence(s), check_euler(s), check_character(s),
            check_degree_leading(s),           check_combinatorial(s),      check_bijection(s),
            check_choice_independence(s)};
}

}  // namespace hlg
