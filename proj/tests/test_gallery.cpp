#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hlg;
using hlg::testing::make;

TEST(GammaOmega, Shapes) {
    RootSystem a3 = make("A3");
    for (int i = 1; i <= 3; ++i) {
        Gallery g = gamma_omega(a3, i);
        ASSERT_EQ(g.size(), 1u);
        EXPECT_EQ(g.target(), a3.fundamental_coweight(i));
    }
    RootSystem c3 = make("C3");
    Gallery g2 = gamma_omega(c3, 2);
    ASSERT_EQ(g2.size(), 2u);
    EXPECT_EQ(g2.vertices[1], Rat(1, 2) * c3.fundamental_coweight(2));
    EXPECT_EQ(g2.gtype.edges[0], (EdgeType{2, Segment::FirstHalf}));
    EXPECT_EQ(g2.gtype.edges[1], (EdgeType{2, Segment::SecondHalf}));

    RootSystem b2 = make("B2");
    EXPECT_EQ(gamma_omega(b2, 2).size(), 1u);
    Gallery g1 = gamma_omega(b2, 1);
    ASSERT_EQ(g1.size(), 2u);
    EXPECT_EQ(g1.vertices[1], Rat(1, 2) * b2.fundamental_coweight(1));
    EXPECT_THROW(gamma_omega(b2, 3), DomainError);
}

TEST(GammaLambda, Examples) {
    RootSystem a2 = make("A2");
    Gallery zero = gamma_lambda(a2, {0, 0});
    EXPECT_EQ(zero.size(), 0u);
    EXPECT_TRUE(zero.target().is_zero());
    Gallery g = gamma_lambda(a2, {2, 1});
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.target(), a2.to_ambient({2, 1}));
    EXPECT_EQ(gamma_lambda_of(a2, a2.to_ambient({2, 1})), g);
    EXPECT_THROW(gamma_lambda(a2, {1}), DomainError);
    EXPECT_THROW(gamma_lambda(a2, {-1, 0}), DomainError);
}

TEST(GammaLambda, TargetIsLambdaInEverySystem) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 3)) {
            Gallery g = gamma_lambda(rs, a);
            EXPECT_EQ(g.target(), rs.to_ambient(a)) << name;
            for (std::size_t k = 0; k < g.size(); ++k)
                EXPECT_NO_THROW(check_edge_type(rs, g.vertices[k], g.gtype.edges[k], g.direction(k)));
        }
    }
}

TEST(Enumeration, Counts) {
    RootSystem a2 = make("A2");
    EXPECT_EQ(galleries_of_lambda(a2, {1, 0}).size(), 3u);
    EXPECT_EQ(galleries_of_lambda(a2, {2, 1}).size(), 27u);
    EXPECT_EQ(count_of_type(a2, gamma_lambda(a2, {2, 1})), 27u);
    EXPECT_EQ(galleries_of_lambda(a2, {0, 0}).size(), 1u);
}

// Count is the product of local orbit sizes along γ_λ, and the enumeration has no repeats.
TEST(Enumeration, CountIsProductOfOrbitSizes) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            Gallery std_g = gamma_lambda(rs, a);
            auto all = galleries_of_lambda(rs, a);
            EXPECT_EQ(all.size(), count_of_type(rs, std_g)) << name;
            std::set<std::vector<Vertex>> distinct;
            for (const auto& g : all) {
                distinct.insert(g.vertices);
                EXPECT_EQ(g.gtype, std_g.gtype);
            }
            EXPECT_EQ(distinct.size(), all.size()) << name;
        }
    }
}

TEST(Enumeration, B2OmegaOneHasTwoEdgesThroughTheMidpoint) {
    RootSystem rs = make("B2");
    for (const auto& g : galleries_of_lambda(rs, {1, 0})) {
        ASSERT_EQ(g.size(), 2u);
        EXPECT_FALSE(is_special(rs, g.vertices[1]));
        EXPECT_TRUE(is_special(rs, g.target()));
    }
}

TEST(Crossings, StandardAndAntidominant) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            const Rat two_rho = dot(rs.to_ambient(a), Rat(2) * rs.rho());
            Gallery g = gamma_lambda(rs, a);
            auto c = crossing_counts(rs, g);
            EXPECT_EQ(Rat(c.sharp_plus), two_rho) << name;
            EXPECT_EQ(c.sharp_minus, 0) << name;
            EXPECT_EQ(Rat(cell_dimension(rs, g)), two_rho) << name;
            Gallery anti = transform(rs, rs.longest(), g);
            EXPECT_EQ(crossing_counts(rs, anti).sharp_plus, 0) << name;
            EXPECT_EQ(cell_dimension(rs, anti), 0) << name;
        }
    }
}

TEST(Crossings, TotalDependsOnlyOnType) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            const Rat two_rho = dot(rs.to_ambient(a), Rat(2) * rs.rho());
            for (const auto& g : galleries_of_lambda(rs, a)) {
                auto c = crossing_counts(rs, g);
                ASSERT_EQ(Rat(c.sharp_pm), two_rho) << name;
                ASSERT_EQ(cell_dimension(rs, g), c.sharp_plus) << name;
            }
        }
    }
}

TEST(Transform, PreservesType) {
    RootSystem rs = make("C3");
    Gallery g = gamma_lambda(rs, {0, 1, 1});
    for (WeylIndex w = 0; w < rs.order(); ++w) {
        Gallery h = transform(rs, w, g);
        EXPECT_EQ(h.gtype, g.gtype);
        EXPECT_EQ(h.target(), rs.act(w, g.target()));
    }
}

TEST(GalleryJson, RoundTripIsBitExact) {
    for (const char* name : {"A2", "B3", "C3"}) {
        RootSystem rs = make(name);
        std::vector<std::int64_t> a(static_cast<std::size_t>(rs.rank()), 0);
        a[1] = 1;
        a.back() += 1;
        for (const auto& g : galleries_of_lambda(rs, a)) {
            const std::string s = to_json(g).dump();
            Gallery back = gallery_from_json(json::parse(s));
            ASSERT_EQ(back, g);
            ASSERT_EQ(to_json(back).dump(), s);
        }
    }
}

TEST(GalleryJson, Format) {
    RootSystem rs = make("C2");
    json j = to_json(gamma_lambda(rs, {0, 1}));
    EXPECT_EQ(j["vertices"][1], json({"1/2", "1/2"}));
    EXPECT_EQ(j["edges"][0]["segment"], "first_half");
    EXPECT_EQ(j["edges"][0]["omega"], 2);
    json bad = j;
    bad["edges"].erase(0);
    EXPECT_THROW(gallery_from_json(bad), DomainError);
}
