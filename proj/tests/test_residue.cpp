#include <gtest/gtest.h>

#include "support.hpp"

using namespace hlg;
using hlg::testing::make;

namespace {

// The Γ⁺(γ_λ, ω₁) gallery of λ = 2ω₁+ω₂ in A2 whose first edge points to s₁ω₁.
Gallery a2_example_gallery(const RootSystem& rs) {
    for (auto& g : enumerate_pf(rs, {2, 1}, rs.fundamental_coweight(1)))
        if (g.direction(0) == rs.act(rs.from_word({0}), rs.fundamental_coweight(1))) return g;
    throw std::runtime_error("example gallery not found");
}

QPoly q_minus_one() { return QPoly(std::vector<std::int64_t>{-1, 1}); }

}  // namespace

TEST(ClosestChamber, Examples) {
    RootSystem rs = make("A2");
    const RootVec o(rs.dim());
    auto anti = closest_chamber_word(rs, o, -rs.generic());
    EXPECT_EQ(anti.element, rs.identity());
    EXPECT_TRUE(anti.word.empty());
    EXPECT_EQ(closest_chamber_word(rs, o, rs.fundamental_coweight(1)).word.size(), 2u);
    EXPECT_EQ(closest_chamber_word(rs, o, rs.generic()).element, rs.longest());
    EXPECT_THROW(closest_chamber_word(rs, o, RootVec(rs.dim())), DomainError);
}

// Minimality by exhaustive search over the local group.
TEST(ClosestChamber, IsShortestContainingChamber) {
    for (const char* name : {"B2", "C3"}) {
        RootSystem rs = make(name);
        for (const auto& g : galleries_of_lambda(rs, std::vector<std::int64_t>(static_cast<std::size_t>(rs.rank()), 1)))
            for (std::size_t k = 0; k < g.size(); k += 3) {
                LocalRootSystem loc(rs, g.vertices[k]);
                auto cc = closest_chamber_word(loc, g.direction(k));
                int best = 1 << 20;
                for (WeylIndex u : loc.elements()) {
                    RootVec x = rs.act(rs.inverse(u), g.direction(k));
                    bool in = true;
                    for (const auto& b : loc.positive_roots()) in = in && !(dot(b, x) > 0);
                    if (in) best = std::min(best, loc.length(u));
                }
                ASSERT_EQ(static_cast<int>(cc.word.size()), best) << name;
                ASSERT_EQ(loc.from_word(cc.word), cc.element);
            }
    }
}

TEST(ClosestChamber, AllReducedWords) {
    RootSystem rs = make("A2");
    LocalRootSystem loc(rs, RootVec(rs.dim()));
    auto words = all_reduced_words(loc, rs.longest());
    EXPECT_EQ(words, (std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}}));
    EXPECT_EQ(all_reduced_words(loc, rs.identity()), std::vector<std::vector<int>>{{}});
}

TEST(WorkedExample, FirstFactorAndJunctions) {
    RootSystem rs = make("A2");
    Gallery g = a2_example_gallery(rs);
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(first_factor_exponent(rs, g), 1);

    auto in1 = junction_input(rs, g, 1);
    auto c1 = enumerate_gamma_plus_op(rs, in1);
    ASSERT_EQ(c1.size(), 1u);
    auto s1 = stats(rs, c1[0]);
    EXPECT_EQ(s1.t, 1);
    EXPECT_EQ(s1.r, 1);
    EXPECT_EQ(junction_factor(rs, in1), QPoly::monomial(1) * q_minus_one());

    auto in2 = junction_input(rs, g, 2);
    EXPECT_TRUE(is_minimal_pair(rs, in2.incoming, in2.outgoing));
    auto c2 = enumerate_gamma_plus_op(rs, in2);
    ASSERT_EQ(c2.size(), 1u);
    EXPECT_EQ(stats(rs, c2[0]).r, 0);
    EXPECT_EQ(junction_factor(rs, in2), QPoly::monomial(1));

    EXPECT_EQ(gallery_contribution(rs, g), QPoly::monomial(3) * q_minus_one());
}

TEST(WorkedExample, OtherGalleryToOmegaOne) {
    RootSystem rs = make("A2");
    Gallery first = a2_example_gallery(rs);
    for (const auto& g : enumerate_pf(rs, {2, 1}, rs.fundamental_coweight(1)))
        if (!(g == first)) { EXPECT_EQ(gallery_contribution(rs, g), QPoly::monomial(3) * q_minus_one()); }
}

TEST(WorkedExample, SectorFromTheFigureIsValid) {
    RootSystem rs = make("A2");
    Gallery g = a2_example_gallery(rs);
    auto in1 = junction_input(rs, g, 1);
    auto valid = valid_sectors(rs, in1.vertex, in1.incoming, in1.outgoing);
    ASSERT_FALSE(valid.empty());
    EXPECT_EQ(valid.front(), in1.sector);
    for (WeylIndex w : valid) {
        auto alt = in1;
        alt.sector = w;
        EXPECT_EQ(junction_factor(rs, alt), junction_factor(rs, in1));
    }
}

TEST(Stats, EmptyWordAndCells) {
    RootSystem rs = make("A2");
    LocalRootSystem loc(rs, RootVec(rs.dim()));
    ChamberGallery cg = build_chamber_gallery(loc, rs.identity(), {}, {});
    auto s = stats(rs, cg);
    EXPECT_EQ(s.t, 0);
    EXPECT_EQ(s.r, 0);
    EXPECT_EQ(QPoly::cell(0, 0), QPoly::constant(1));
    EXPECT_EQ(QPoly::cell(2, 1), QPoly(std::vector<std::int64_t>{0, 0, -1, 1}));
}

// A minimal junction contributes a single power of q; with a regular incoming
// direction it comes from exactly one unfolded chamber gallery.
TEST(Junctions, MinimalJunctionsHaveOneUnfoldedGallery) {
    for (const char* name : {"A2", "B2", "C2", "A3"}) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2))
            for (const auto& g : galleries_of_lambda(rs, a)) {
                if (!is_positively_folded(rs, g)) continue;
                for (std::size_t j = 1; j < g.size(); ++j) {
                    auto in = junction_input(rs, g, j);
                    if (!is_minimal_pair(rs, in.incoming, in.outgoing)) continue;
                    const QPoly f = junction_factor(rs, in);
                    ASSERT_EQ(f, QPoly::monomial(f.degree())) << name;
                    if (valid_sectors(rs, in.vertex, in.incoming, in.outgoing).size() != 1) continue;
                    auto cs = enumerate_gamma_plus_op(rs, in);
                    ASSERT_EQ(cs.size(), 1u) << name;
                    EXPECT_EQ(stats(rs, cs[0]).r, 0);
                }
            }
    }
}

// Γ⁺(i, op) is nonempty exactly at positively folded junctions.
TEST(Junctions, NonemptyIffTwoStepFolded) {
    for (const char* name : {"A2", "B2", "C2"}) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(2, 3))
            for (const auto& g : galleries_of_lambda(rs, a))
                for (std::size_t j = 1; j < g.size(); ++j) {
                    const bool pf = two_step_pf(rs, g.vertices[j], g.vertices[j - 1] - g.vertices[j], g.direction(j));
                    auto d_in = g.vertices[j - 1] - g.vertices[j];
                    auto sectors = valid_sectors(rs, g.vertices[j], d_in, g.direction(j));
                    if (sectors.empty()) {
                        EXPECT_FALSE(pf) << name;
                        continue;
                    }
                    JunctionFactorInput in{g.vertices[j], d_in, g.direction(j), sectors.front()};
                    ASSERT_EQ(!enumerate_gamma_plus_op(rs, in).empty(), pf) << name;
                }
    }
}

TEST(Junctions, RejectsForeignWords) {
    RootSystem rs = make("A2");
    Gallery g = a2_example_gallery(rs);
    auto in = junction_input(rs, g, 1);
    EXPECT_THROW(enumerate_gamma_plus_op(rs, in, std::vector<int>{0, 0, 0, 0}), DomainError);
}
