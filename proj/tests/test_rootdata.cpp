#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hlg;
using hlg::testing::make;

TEST(RootData, Cardinalities) {
    struct Row {
        const char* name;
        std::size_t w, pos;
    };
    for (auto [name, w, pos] : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"A3", 24, 6}, Row{"B2", 8, 4},
                                Row{"C2", 8, 4}, Row{"B3", 48, 9}, Row{"C3", 48, 9}}) {
        RootSystem rs = make(name);
        EXPECT_EQ(rs.order(), w) << name;
        EXPECT_EQ(rs.positive_roots().size(), pos) << name;
        EXPECT_EQ(rs.roots().size(), 2 * pos) << name;
        EXPECT_EQ(rs.simple_roots().size(), static_cast<std::size_t>(rs.rank())) << name;
    }
}

TEST(RootData, RejectsUnsupportedSpecs) {
    EXPECT_THROW(RootSystemSpec::parse("D4"), ConfigError);
    EXPECT_THROW(RootSystemSpec::parse("A0"), ConfigError);
    EXPECT_THROW(RootSystemSpec::parse("B5"), ConfigError);
    EXPECT_THROW(RootSystemSpec::parse("A"), ConfigError);
    EXPECT_THROW(RootSystemSpec::parse("A9"), ConfigError);
}

TEST(RootData, PairingWithRho) {
    RootSystem rs = make("A2");
    EXPECT_EQ(rs.pairing(rs.to_ambient({2, 3}), rs.rho()), Rat(5));
    EXPECT_EQ(rs.pairing(RootVec(rs.dim()), rs.rho()), Rat(0));
}

TEST(RootData, TwoRhoIsSumOverPositiveRoots) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (const auto& a : hlg::testing::lambdas_up_to(rs.rank(), 2)) {
            RootVec l = rs.to_ambient(a);
            Rat s(0);
            for (const auto& b : rs.positive_roots()) s += dot(l, b);
            EXPECT_EQ(dot(l, Rat(2) * rs.rho()), s) << name;
        }
    }
}

TEST(RootData, FundamentalCoweightsAreDual) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (int i = 1; i <= rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                EXPECT_EQ(dot(rs.fundamental_coweight(i), rs.simple_roots()[j]), Rat(i - 1 == j ? 1 : 0)) << name;
    }
}

TEST(RootData, Minuscule) {
    RootSystem a3 = make("A3"), b3 = make("B3"), c3 = make("C3");
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(a3.is_minuscule(i));
    EXPECT_FALSE(b3.is_minuscule(1));
    EXPECT_FALSE(b3.is_minuscule(2));
    EXPECT_TRUE(b3.is_minuscule(3));
    EXPECT_TRUE(c3.is_minuscule(1));
    EXPECT_FALSE(c3.is_minuscule(2));
    EXPECT_FALSE(c3.is_minuscule(3));
}

TEST(RootData, ReducedWordsAreReduced) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (WeylIndex w = 0; w < rs.order(); ++w) {
            auto word = rs.reduced_word(w);
            EXPECT_EQ(static_cast<int>(word.size()), rs.length(w));
            EXPECT_EQ(rs.from_word(word), w);
            EXPECT_EQ(rs.mul(w, rs.inverse(w)), rs.identity());
        }
        EXPECT_EQ(rs.length(rs.longest()), static_cast<int>(rs.positive_roots().size()));
    }
}

TEST(Bruhat, Examples) {
    RootSystem rs = make("A2");
    const WeylIndex s1 = rs.from_word({0}), s2 = rs.from_word({1}), s1s2 = rs.from_word({0, 1});
    EXPECT_TRUE(rs.bruhat_leq(s1, s1s2));
    EXPECT_FALSE(rs.bruhat_leq(s1, s2));
    for (WeylIndex w = 0; w < rs.order(); ++w) {
        EXPECT_TRUE(rs.bruhat_leq(rs.identity(), w));
        if (w != rs.longest()) { EXPECT_FALSE(rs.bruhat_leq(rs.longest(), w)); }
    }
}

// u ≤ w iff u is the product of a subword of a fixed reduced word of w.
TEST(Bruhat, AgreesWithSubwordCriterion) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (WeylIndex w = 0; w < rs.order(); ++w) {
            const auto word = rs.reduced_word(w);
            std::set<WeylIndex> below;
            for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
                WeylIndex u = rs.identity();
                for (std::size_t k = 0; k < word.size(); ++k)
                    if (mask >> k & 1u) u = rs.mul(u, rs.simple_reflection(word[k]));
                below.insert(u);
            }
            for (WeylIndex u = 0; u < rs.order(); ++u)
                ASSERT_EQ(rs.bruhat_leq(u, w), below.count(u) == 1) << name << " u=" << u << " w=" << w;
        }
    }
}

TEST(ChamberClasses, Examples) {
    RootSystem rs = make("A2");
    EXPECT_EQ(rs.chamber_classes_of_direction(rs.generic()), std::vector<WeylIndex>{rs.identity()});
    EXPECT_EQ(rs.chamber_classes_of_direction(-rs.generic()), std::vector<WeylIndex>{rs.longest()});
    std::vector<WeylIndex> want{rs.identity(), rs.from_word({1})};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(rs.chamber_classes_of_direction(rs.fundamental_coweight(1)), want);
    EXPECT_THROW(rs.chamber_classes_of_direction(RootVec(rs.dim())), DomainError);
}

// The classes of w(ω_i) form one left coset of the stabiliser of ω_i.
TEST(ChamberClasses, FormAStabiliserCoset) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        for (int i = 1; i <= rs.rank(); ++i) {
            const RootVec& om = rs.fundamental_coweight(i);
            std::vector<WeylIndex> stab;
            for (WeylIndex s = 0; s < rs.order(); ++s)
                if (rs.act(s, om) == om) stab.push_back(s);
            for (WeylIndex w = 0; w < rs.order(); ++w) {
                auto cls = rs.chamber_classes_of_direction(rs.act(w, om));
                std::set<WeylIndex> coset;
                for (WeylIndex s : stab) coset.insert(rs.mul(cls.front(), s));
                EXPECT_EQ(std::set<WeylIndex>(cls.begin(), cls.end()), coset) << name;
                for (WeylIndex u : cls) EXPECT_EQ(rs.act(u, om), rs.act(w, om)) << name;
            }
        }
    }
}

TEST(RootData, WeylGroupPreservesRoots) {
    for (const auto& name : hlg::testing::small_systems()) {
        RootSystem rs = make(name);
        std::set<RootVec> roots(rs.roots().begin(), rs.roots().end());
        for (WeylIndex w = 0; w < rs.order(); ++w)
            for (const auto& a : rs.roots()) ASSERT_TRUE(roots.count(rs.act(w, a))) << name;
    }
}
