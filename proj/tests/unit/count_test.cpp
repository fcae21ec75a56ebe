#include <gtest/gtest.h>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/count/point_count.hpp"
#include "plancheck/lfactors/l_factors.hpp"
#include "plancheck/lie/lie_algebra.hpp"

using namespace plancheck;

TEST(GroupOrder, Examples) {
    EXPECT_EQ(group_order({GroupFamily::Sp, 1, 3}), 24);
    EXPECT_EQ(group_order({GroupFamily::Sp, 2, 3}), 51840);
    EXPECT_EQ(group_order({GroupFamily::SO_odd, 2, 3}), 51840);
    EXPECT_EQ(group_order({GroupFamily::O_odd, 1, 3}), 48);
    EXPECT_EQ(group_order({GroupFamily::O_even_split, 1, 3}), 4);
    EXPECT_THROW(group_order({GroupFamily::Sp, 1, 4}), ParameterError);
    EXPECT_THROW(group_order({GroupFamily::Sp, 1, 15}), ParameterError);
    EXPECT_THROW(group_order({GroupFamily::Sp, 0, 3}), ParameterError);
    EXPECT_TRUE(is_odd_prime_power(9));
    EXPECT_TRUE(is_odd_prime_power(125));
    EXPECT_FALSE(is_odd_prime_power(2));
}

TEST(GroupOrder, OddOrthogonalMatchesSymplectic) {
    for (int a = 1; a <= 4; ++a) {
        for (long q : {3L, 5L, 9L}) {
            EXPECT_EQ(group_order({GroupFamily::SO_odd, a, q}), group_order({GroupFamily::Sp, a, q}));
        }
    }
}

TEST(TamagawaVolume, Examples) {
    EXPECT_EQ(tamagawa_volume({GroupFamily::SO_even_split, 3, 3}), Rational(16640, 19683));
    EXPECT_EQ(tamagawa_volume({GroupFamily::Sp, 1, 3}), Rational(8, 9));
    EXPECT_EQ(tamagawa_volume({GroupFamily::Sp, 2, 3}), make_rational(51840, 59049));
    EXPECT_EQ(tamagawa_volume({GroupFamily::Sp, 2, 3}), (1 - Rational(1, 9)) * (1 - Rational(1, 81)));
}

TEST(TamagawaVolume, InverseOfMotiveFactor) {
    for (int r = 1; r <= 6; ++r) {
        for (long q : {3L, 5L}) {
            EXPECT_EQ(tamagawa_volume({GroupFamily::Sp, r, q}) * motive_delta(Family::C, r, q), 1);
            EXPECT_EQ(tamagawa_volume({GroupFamily::SO_odd, r, q}) * motive_delta(Family::B, r, q), 1);
            if (r >= 2) {
                EXPECT_EQ(tamagawa_volume({GroupFamily::SO_even_split, r, q}) * motive_delta(Family::D, r, q), 1);
            }
        }
    }
}

TEST(GroupOrder, SymbolicMatchesNumeric) {
    for (GroupFamily f : {GroupFamily::Sp, GroupFamily::SO_odd, GroupFamily::SO_even_split, GroupFamily::O_odd,
                          GroupFamily::O_even_split}) {
        for (int r = 1; r <= 4; ++r) {
            for (long q : {3L, 5L}) {
                EXPECT_EQ(group_order_symbolic(f, r).evaluate_q(q, {}), Rational(group_order({f, r, q})));
            }
        }
    }
}

TEST(XPointCount, Examples) {
    EXPECT_EQ(x_point_count(3, 1, 3), 234);
    // q^5 (1 - q^-3) = u^-10 - u^-4
    EXPECT_EQ(x_point_count_symbolic(3, 1), RationalFunction(LaurentPoly::parse("u^-10 - u^-4", 1)));
    for (int k = 2; k <= 6; ++k) {
        for (int a = 1; a <= k - 1; ++a) {
            const auto c = x_geometry(k, a);
            const Rational ratio = x_point_count(k, a, 101) / Rational(ipow(Integer(101), c.dimX));
            EXPECT_LE(ratio, 1);
            EXPECT_GT(ratio, Rational(9, 10));
        }
    }
    EXPECT_THROW(x_point_count(3, 3, 3), ParameterError);
}

TEST(XVolume, Examples) {
    EXPECT_EQ(x_volume_renormalized(3, 1, 3), Rational(729, 640));
    EXPECT_EQ(x_volume_renormalized(3, 1, 5), Rational(15625, 14976));
    EXPECT_TRUE(rf_equal(x_volume_renormalized_symbolic(3, 1), zeta_symbolic(2) * zeta_symbolic(4)));
    for (int k = 2; k <= 6; ++k) {
        for (int a = 1; a <= k - 1; ++a) {
            EXPECT_EQ(x_volume_renormalized_symbolic(k, a).evaluate_q(3, {}), x_volume_renormalized(k, a, 3));
        }
    }
}

TEST(BruteForce, Examples) {
    EXPECT_EQ(brute_force_order(split_gram(GroupFamily::Sp, 1), 3, false), 24);
    EXPECT_EQ(brute_force_order(split_gram(GroupFamily::O_odd, 1), 3, false), 48);
    EXPECT_EQ(brute_force_order(split_gram(GroupFamily::O_even_split, 1), 3, false), 4);
    EXPECT_THROW(brute_force_order(split_gram(GroupFamily::Sp, 2), 5, false), ParameterError);
    EXPECT_THROW(brute_force_order(split_gram(GroupFamily::Sp, 1), 9, false), ParameterError);
}

TEST(BruteForce, AgreesWithFormulas) {
    struct Case {
        GroupFamily family;
        int rank;
        long q;
    };
    const std::vector<Case> cases{
        {GroupFamily::Sp, 1, 3},           {GroupFamily::SO_odd, 0, 3},       {GroupFamily::O_odd, 0, 3},
        {GroupFamily::SO_odd, 1, 3},       {GroupFamily::O_odd, 1, 3},        {GroupFamily::SO_even_split, 1, 3},
        {GroupFamily::O_even_split, 1, 3}, {GroupFamily::Sp, 1, 5},           {GroupFamily::SO_even_split, 1, 5},
        {GroupFamily::O_even_split, 1, 5}, {GroupFamily::Sp, 2, 3},
    };
    for (const auto& c : cases) {
        const bool det_one = c.family == GroupFamily::SO_odd || c.family == GroupFamily::SO_even_split;
        EXPECT_EQ(Integer(static_cast<long>(brute_force_order(split_gram(c.family, c.rank), c.q, det_one))),
                  group_order({c.family, c.rank, c.q}))
            << group_family_name(c.family) << " " << c.rank << " " << c.q;
    }
}
