#include <gtest/gtest.h>

#include "support.hpp"

using namespace hlg;
using hlg::testing::make;

TEST(DirectHL, Trivial) {
    RootSystem rs = make("B2");
    auto p = hall_littlewood_direct(rs, RootVec(rs.dim()));
    ASSERT_EQ(p.terms.size(), 1u);
    EXPECT_EQ(p.coefficient(RootVec(rs.dim())), QPoly::constant(1));
}

// Hand expansion for A1, λ = α^∨: P = x^{α^∨} + x^{−α^∨} + (1 − t).
TEST(DirectHL, A1TwoOmega) {
    RootSystem rs = make("A1");
    const RootVec a = RootSystem::coroot(rs.simple_roots()[0]);
    auto p = hall_littlewood_direct(rs, a);
    EXPECT_EQ(p.coefficient(a), QPoly::constant(1));
    EXPECT_EQ(p.coefficient(-a), QPoly::constant(1));
    EXPECT_EQ(p.coefficient(RootVec(rs.dim())), QPoly(std::vector<std::int64_t>{1, -1}));
    EXPECT_EQ(p.terms.size(), 3u);
}

TEST(DirectHL, RejectsNonDominant) {
    RootSystem rs = make("A2");
    EXPECT_THROW(hall_littlewood_direct(rs, -rs.fundamental_coweight(1)), DomainError);
    EXPECT_THROW(hall_littlewood_direct(rs, Rat(1, 2) * rs.fundamental_coweight(1)), DomainError);
}

TEST(DirectHL, IsWeylInvariant) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            auto p = hall_littlewood_direct(rs, rs.to_ambient(a));
            for (const auto& [k, v] : p.terms) {
                RootVec x = LaurentMonomialMap::vec_of(k);
                for (WeylIndex s = 0; s < rs.order(); s += 5) ASSERT_EQ(p.coefficient(rs.act(s, x)), v) << name;
            }
        }
    }
}

// t → 0 recovers the Weyl character.
TEST(DirectHL, ConstantTermIsWeylCharacter) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            const RootVec l = rs.to_ambient(a);
            std::map<RootVec, std::int64_t> limit;
            for (const auto& [k, v] : hall_littlewood_direct(rs, l).terms)
                if (v.coeff(0) != 0) limit[rs.canonical(LaurentMonomialMap::vec_of(k))] += v.coeff(0);
            EXPECT_EQ(limit, freudenthal_character(rs, l)) << name;
        }
    }
}

TEST(LFromDirect, WorkedExample) {
    RootSystem rs = make("A2");
    const RootVec l = rs.to_ambient({2, 1});
    EXPECT_EQ(L_from_direct(rs, l, l), QPoly::monomial(6));
    EXPECT_EQ(L_from_direct(rs, l, rs.to_ambient({0, 2})), QPoly(std::vector<std::int64_t>{0, 0, 0, 0, -1, 1}));
    EXPECT_EQ(L_from_direct(rs, l, rs.to_ambient({1, 0})), QPoly(std::vector<std::int64_t>{0, 0, 0, -2, 2}));
    EXPECT_TRUE(L_from_direct(rs, l, rs.to_ambient({3, 0})).is_zero());
    EXPECT_THROW(L_from_direct(rs, l, -rs.to_ambient({1, 0})), DomainError);
}

TEST(LFromDirect, HighestTermIsMonic) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            const RootVec l = rs.to_ambient(a);
            const Rat d = dot(l, Rat(2) * rs.rho());
            EXPECT_EQ(L_from_direct(rs, l, l), QPoly::monomial(static_cast<int>(d.numerator()))) << name;
        }
    }
}

TEST(Freudenthal, Examples) {
    RootSystem rs = make("A2");
    auto zero = freudenthal_character(rs, RootVec(rs.dim()));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero.begin()->second, 1);
    std::int64_t mass = 0;
    for (const auto& [w, m] : freudenthal_character(rs, rs.to_ambient({2, 1}))) mass += m;
    EXPECT_EQ(mass, 15);
    EXPECT_EQ(weyl_dimension(rs, rs.to_ambient({2, 1})), 15);
    EXPECT_EQ(weyl_dimension(make("C3"), make("C3").to_ambient({0, 1, 0})), 14);
    EXPECT_EQ(weyl_dimension(make("B3"), make("B3").to_ambient({0, 0, 1})), 8);
    EXPECT_EQ(weyl_dimension(make("B3"), make("B3").to_ambient({1, 0, 0})), 7);
}

TEST(Freudenthal, MassIsWeylDimensionAndExtremalWeightsAreSimple) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 3)) {
            const RootVec l = rs.to_ambient(a);
            auto ch = freudenthal_character(rs, l);
            std::int64_t mass = 0;
            for (const auto& [w, m] : ch) mass += m;
            EXPECT_EQ(mass, weyl_dimension(rs, l)) << name;
            for (WeylIndex w = 0; w < rs.order(); ++w) EXPECT_EQ(ch.at(rs.canonical(rs.act(w, l))), 1) << name;
            for (const auto& [x, m] : ch) {
                auto it = ch.find(rs.canonical(rs.act(rs.simple_reflection(0), x)));
                ASSERT_NE(it, ch.end());
                EXPECT_EQ(it->second, m);
            }
        }
    }
}

TEST(Kostka, Examples) {
    RootSystem rs = make("A3");
    auto ambient = [&](std::vector<std::int64_t> c) {
        RootVec v(rs.dim());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rat(c[i]);
        return rs.canonical(v);
    };
    // shape (3,1) = 2ω₁ + ω₂
    EXPECT_EQ(kostka(rs, {2, 1, 0}, ambient({2, 1, 1, 0})), 2);
    EXPECT_EQ(kostka(rs, {2, 1, 0}, ambient({2, 2, 0, 0})), 1);
    EXPECT_EQ(kostka(rs, {2, 1, 0}, ambient({3, 1, 0, 0})), 1);
    EXPECT_EQ(hlg::testing::count_ssyt({3, 1}, {2, 1, 1, 0}), 2);
    EXPECT_EQ(hlg::testing::count_ssyt({3, 1}, {2, 2, 0, 0}), 1);
    EXPECT_THROW(kostka(make("B2"), {1, 0}, RootVec(2)), DomainError);
}

TEST(Kostka, AgreesWithBruteForce) {
    RootSystem rs = make("A3");
    for (const auto& a : hlg::testing::lambdas_up_to(3, 3)) {
        auto shape = shape_partition(rs, a);
        std::int64_t boxes = 0;
        for (auto x : shape) boxes += x;
        for (std::int64_t c0 = 0; c0 <= boxes; ++c0)
            for (std::int64_t c1 = 0; c0 + c1 <= boxes; ++c1)
                for (std::int64_t c2 = 0; c0 + c1 + c2 <= boxes; ++c2) {
                    std::vector<std::int64_t> c{c0, c1, c2, boxes - c0 - c1 - c2};
                    RootVec v(rs.dim());
                    for (std::size_t i = 0; i < 4; ++i) v[i] = Rat(c[i]);
                    ASSERT_EQ(kostka(rs, a, rs.canonical(v)), hlg::testing::count_ssyt(shape, c));
                }
    }
}
