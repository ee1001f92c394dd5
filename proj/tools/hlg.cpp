// hlg: Hall–Littlewood coefficients from one-skeleton galleries.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlg/hlg.hpp"

using namespace hlg;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type;
    std::string lambda;
    std::string mu;
    std::string format = "pretty";
    unsigned jobs = 1;
    // verify
    std::string suite = "full";
    std::vector<std::string> systems;
    int max_terms = 3;
    int max_dim = 16;
    std::string fault = "none";
    std::uint64_t seed = 20240601;
    int junctions = 300;
    // listings
    bool ls_only = false;
    bool all = false;
    bool semistandard = false;
    bool oracle = false;
};

std::vector<std::int64_t> parse_coeffs(const std::string& s, const RootSystem& rs, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::int64_t v = 0;
        const char* b = tok.data();
        const char* e = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e) throw UsageError(std::string(what) + ": not an integer: '" + tok + "'");
        if (v < 0) throw UsageError(std::string(what) + " must be dominant (nonnegative coefficients)");
        out.push_back(v);
    }
    if (out.size() != static_cast<std::size_t>(rs.rank()))
        throw UsageError(std::string(what) + ": expected " + std::to_string(rs.rank()) + " coefficients for " +
                         rs.name());
    return out;
}

RootSystem system_of(const Options& o) {
    try {
        return RootSystem(RootSystemSpec::parse(o.type));
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string coords(const RootSystem& rs, const RootVec& v) {
    std::string out;
    for (const auto& c : rs.coweight_coordinates(v)) out += (out.empty() ? "" : " ") + to_short_string(c);
    return out;
}

json coords_json(const RootSystem& rs, const RootVec& v) {
    json j = json::array();
    for (const auto& c : rs.coweight_coordinates(v)) j.push_back(to_short_string(c));
    return j;
}

std::string word_string(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string out;
    for (int i : w) out += "s" + std::to_string(i + 1);
    return out;
}

std::string columns_string(const Tableau& t) {
    std::string out;
    for (const auto& c : t.columns) {
        if (!out.empty()) out += '|';
        for (std::size_t r = 0; r < c.size(); ++r) out += (r ? " " : "") + std::to_string(c[r]);
    }
    return out;
}

int cmd_L(const Options& o) {
    RootSystem rs = system_of(o);
    if (o.mu.empty()) throw UsageError("--mu is required");
    auto lambda = parse_coeffs(o.lambda, rs, "--lambda");
    auto mu = parse_coeffs(o.mu, rs, "--mu");
    QPoly p = L_polynomial(rs, lambda, mu, o.jobs);
    if (o.format == "json") {
        std::cout << json{{"type", rs.name()}, {"lambda", lambda}, {"mu", mu}, {"L", to_json(p)}}.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "power,coefficient\n";
        for (int k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) std::cout << k << ',' << p.coeff(k) << '\n';
    } else {
        std::cout << p.str() << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    Fault fault = o.fault == "sign-flip" ? Fault::SignFlip : Fault::None;
    std::vector<CheckResult> results;
    if (o.suite == "a2-example") {
        results.push_back(check_a2_example(fault));
    } else {
        SuiteConfig cfg;
        if (!o.systems.empty()) cfg.systems = o.systems;
        for (const auto& s : cfg.systems) {
            try {
                RootSystemSpec::parse(s);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
        }
        cfg.max_terms = o.max_terms;
        cfg.max_dim = o.max_dim;
        cfg.jobs = o.jobs;
        cfg.fault = fault;
        cfg.seed = o.seed;
        cfg.random_junctions = o.junctions;
        Suite s(cfg);
        s.prepare();
        results = run_full_suite(s);
    }
    bool ok = true;
    json report = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        json j = r.to_json();
        j.erase("seconds");  // keeps the report byte-identical across runs
        report.push_back(j);
    }
    if (o.format == "json") {
        std::cout << report.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "id,passed,cases\n";
        for (const auto& r : results) std::cout << r.id << ',' << (r.passed ? "true" : "false") << ',' << r.cases << '\n';
    } else {
        for (const auto& r : results)
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << r.cases << " cases): " << r.description
                      << '\n';
    }
    if (!ok) {
        json diff = json::array();
        for (const auto& r : results)
            if (!r.passed) diff.push_back(json{{"id", r.id}, {"counterexample", r.counterexample}});
        std::cerr << diff.dump(2) << '\n';
        return kMismatch;
    }
    return kOk;
}

int cmd_galleries(const Options& o) {
    RootSystem rs = system_of(o);
    auto lambda = parse_coeffs(o.lambda, rs, "--lambda");
    std::vector<Gallery> gs;
    if (!o.mu.empty()) {
        gs = enumerate_pf(rs, lambda, rs.to_ambient(parse_coeffs(o.mu, rs, "--mu")));
    } else {
        for (auto& g : galleries_of_lambda(rs, lambda))
            if (o.all || is_positively_folded(rs, g)) gs.push_back(std::move(g));
    }

    json rows = json::array();
    if (o.format == "csv") std::cout << "index,target,positively_folded,ls,minimal,chain,contribution\n";
    std::size_t index = 0;
    for (const auto& g : gs) {
        const bool pf = is_positively_folded(rs, g);
        const bool ls = pf && is_LS(rs, g);
        if (o.ls_only && !ls) continue;
        std::vector<std::string> chain;
        if (auto c = defining_chain(rs, g); c && pf)
            for (WeylIndex w : *c) chain.push_back(word_string(rs.reduced_word(w)));
        const bool has_contribution = pf && rs.is_dominant(g.target());
        const QPoly contribution = has_contribution ? gallery_contribution(rs, g) : QPoly();
        const bool minimal = is_minimal(rs, g);
        if (o.format == "json") {
            json row{{"index", index},
                     {"gallery", to_json(g)},
                     {"target", coords_json(rs, g.target())},
                     {"positively_folded", pf},
                     {"ls", ls},
                     {"minimal", minimal},
                     {"chain", chain}};
            row["contribution"] = has_contribution ? to_json(contribution) : json(nullptr);
            rows.push_back(row);
        } else {
            std::string ch;
            for (const auto& w : chain) ch += (ch.empty() ? "" : " ") + w;
            const std::string contrib = has_contribution ? contribution.str() : "-";
            if (o.format == "csv") {
                std::cout << index << ',' << coords(rs, g.target()) << ',' << pf << ',' << ls << ',' << minimal << ','
                          << ch << ',' << contrib << '\n';
            } else {
                std::cout << '#' << index << "  target (" << coords(rs, g.target()) << ")" << (ls ? "  LS" : "")
                          << (pf ? "" : "  not-PF") << "  chain [" << ch << "]  contribution " << contrib << '\n';
                for (std::size_t k = 0; k < g.vertices.size(); ++k)
                    std::cout << "    (" << coords(rs, g.vertices[k]) << ")\n";
            }
        }
        ++index;
    }
    if (o.format == "json") std::cout << rows.dump(2) << '\n';
    return kOk;
}

int cmd_char(const Options& o) {
    RootSystem rs = system_of(o);
    auto lambda = parse_coeffs(o.lambda, rs, "--lambda");
    FormalCharacter ch;
    if (o.oracle) {
        for (const auto& [w, m] : freudenthal_character(rs, rs.to_ambient(lambda))) ch[w] = m;
    } else {
        ch = character_LS(rs, lambda);
    }
    if (o.format == "json") {
        json out = json::array();
        for (const auto& [w, m] : ch) out.push_back(json{{"weight", coords_json(rs, w)}, {"mult", m}});
        std::cout << out.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "weight,mult\n";
        for (const auto& [w, m] : ch) std::cout << coords(rs, w) << ',' << m << '\n';
    } else {
        for (const auto& [w, m] : ch) std::cout << '(' << coords(rs, w) << ")  " << m << '\n';
    }
    return kOk;
}

int cmd_tableaux(const Options& o) {
    RootSystem rs = system_of(o);
    auto lambda = parse_coeffs(o.lambda, rs, "--lambda");
    std::optional<RootVec> mu;
    if (!o.mu.empty()) mu = rs.to_ambient(parse_coeffs(o.mu, rs, "--mu"));

    json rows = json::array();
    if (o.format == "csv") std::cout << "index,columns,target,semistandard\n";
    std::size_t index = 0;
    for (const auto& g : galleries_of_lambda(rs, lambda)) {
        if (mu && !rs.same_point(g.target(), *mu)) continue;
        Tableau t = gallery_to_tableau(rs, g);
        const bool ss = is_semistandard(t);
        if (o.semistandard && !ss) continue;
        if (o.format == "json") {
            rows.push_back(json{{"index", index},
                                {"tableau", to_json(t)},
                                {"target", coords_json(rs, g.target())},
                                {"semistandard", ss}});
        } else if (o.format == "csv") {
            std::cout << index << ',' << columns_string(t) << ',' << coords(rs, g.target()) << ',' << ss << '\n';
        } else {
            std::cout << '#' << index << "  target (" << coords(rs, g.target()) << ")"
                      << (ss ? "  semistandard" : "") << '\n'
                      << pretty(t) << '\n';
        }
        ++index;
    }
    if (o.format == "json") std::cout << rows.dump(2) << '\n';
    if (o.format == "pretty") std::cout << "count: " << index << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hall-Littlewood coefficients via one-skeleton galleries"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c, bool need_lambda) {
        c->add_option("--type", o.type, "root system, e.g. A2, B3, C2")->required();
        auto* l = c->add_option("--lambda", o.lambda, "coefficients of lambda over fundamental coweights");
        if (need_lambda) l->required();
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}))
            ->capture_default_str();
        c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    };

    auto* L = app.add_subcommand("L", "print L_{lambda,mu}(q)");
    common(L, true);
    L->add_option("--mu", o.mu, "coefficients of mu")->required();

    auto* verify = app.add_subcommand("verify", "run the oracle and invariant suite");
    verify->add_option("--suite", o.suite, "full or a2-example")
        ->check(CLI::IsMember({"full", "a2-example"}))
        ->capture_default_str();
    verify->add_option("--type", o.systems, "restrict to these root systems (repeatable)");
    verify->add_option("--max-terms", o.max_terms, "bound on the sum of lambda's coefficients")->capture_default_str();
    verify->add_option("--max-dim", o.max_dim, "bound on <lambda, 2rho>")->capture_default_str();
    verify->add_option("--inject-fault", o.fault, "harness self-test")
        ->check(CLI::IsMember({"none", "sign-flip"}))
        ->capture_default_str();
    verify->add_option("--seed", o.seed, "seed for rank-3 spot checks")->capture_default_str();
    verify->add_option("--junctions", o.junctions, "number of rank-3 spot-checked junctions")->capture_default_str();
    verify->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* galleries = app.add_subcommand("galleries", "list positively folded galleries of type gamma_lambda");
    common(galleries, true);
    galleries->add_option("--mu", o.mu, "restrict to target mu");
    galleries->add_flag("--ls-only", o.ls_only, "only LS-galleries");
    galleries->add_flag("--all", o.all, "include galleries that are not positively folded (ignored with --mu)");

    auto* chr = app.add_subcommand("char", "character of V(lambda) from LS-galleries");
    common(chr, true);
    chr->add_flag("--oracle", o.oracle, "use the Freudenthal formula instead");

    auto* tab = app.add_subcommand("tableaux", "tableaux of all galleries of type gamma_lambda");
    common(tab, true);
    tab->add_option("--mu", o.mu, "restrict to content mu");
    tab->add_flag("--semistandard", o.semistandard, "only semistandard tableaux");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*L) return cmd_L(o);
        if (*verify) return cmd_verify(o);
        if (*galleries) return cmd_galleries(o);
        if (*chr) return cmd_char(o);
        if (*tab) return cmd_tableaux(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
