#include <gtest/gtest.h>

#include <algorithm>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/lfactors/l_factors.hpp"
#include "plancheck/lie/lie_algebra.hpp"

using namespace plancheck;

namespace {

Rational exact_value(const LValue& v) { return std::get<Rational>(v); }

SatakeParam random_unitary(int rank, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(0, 996);
    std::vector<Rational> turns;
    for (int i = 0; i < rank; ++i) turns.push_back(Rational(num(rng), 997));
    return SatakeParam::unitary(turns);
}

}  // namespace

TEST(Characters, StdAdjointAndGModA) {
    EXPECT_EQ(std_char(Family::B, 1), GradedCharacter(1, {{{1}, 0, 1}, {{0}, 0, 1}, {{-1}, 0, 1}}));
    EXPECT_EQ(std_char(Family::B, 2).dimension(), 5);
    auto d3 = std_char(Family::D, 3);
    EXPECT_EQ(d3.dimension(), 6);
    EXPECT_EQ(d3.entries().size(), 6u);
    EXPECT_EQ(adjoint_char(Family::B, 1), std_char(Family::B, 1));
    EXPECT_EQ(adjoint_char(Family::B, 2).dimension(), 10);
    EXPECT_EQ(adjoint_char(Family::B, 3).dimension(), 21);
    EXPECT_EQ(g_mod_a_char(Family::B, 1), GradedCharacter(1, {{{1}, 0, 1}, {{-1}, 0, 1}}));
    EXPECT_EQ(g_mod_a_char(Family::B, 2).dimension(), 8);
    for (int a = 1; a <= 4; ++a) {
        EXPECT_EQ(adjoint_char(Family::B, a) - g_mod_a_char(Family::B, a), trivial_char(a, 0, a));
        EXPECT_TRUE(adjoint_char(Family::B, a).is_self_dual());
    }
}

TEST(Characters, Describe) {
    EXPECT_EQ(slice_closed_form(3, 1).describe(), "std_3@4 + triv@4 (dim 4)");
    EXPECT_EQ(slice_closed_form(5, 2).describe(), "std_5@6 + triv@4 + triv@8 (dim 7)");
    EXPECT_EQ(GradedCharacter(1).describe(), "0 (dim 0)");
}

TEST(Zeta, Values) {
    EXPECT_EQ(zeta(2, 3), Rational(9, 8));
    EXPECT_EQ(zeta(4, 3), Rational(81, 80));
    EXPECT_EQ(zeta(3, 3), Rational(27, 26));
    EXPECT_EQ(zeta(Rational(1, 2), 9), Rational(3, 2));
    EXPECT_THROW(zeta(Rational(1, 2), 3), std::domain_error);
    EXPECT_THROW(zeta(0, 3), ParameterError);
    EXPECT_EQ(zeta_symbolic(2).evaluate_q(3, {}), Rational(9, 8));
}

TEST(MotiveDelta, Values) {
    EXPECT_EQ(motive_delta(Family::C, 1, 3), Rational(9, 8));
    EXPECT_EQ(motive_delta(Family::D, 3, 3), Rational(19683, 16640));
    EXPECT_EQ(motive_delta(Family::C, 2, 3), Rational(729, 640));
    EXPECT_EQ(motive_delta_symbolic(Family::D, 4).evaluate_q(5, {}), motive_delta(Family::D, 4, 5));
}

TEST(LFactor, Examples) {
    auto t1 = SatakeParam::exact({ExactCoordinate::from_rational(1)});
    EXPECT_EQ(exact_value(l_factor(std_char(Family::B, 1), 2, t1, 3)), Rational(729, 512));
    auto triv = trivial_char(1, 0);
    EXPECT_EQ(exact_value(l_factor(triv, 1, t1, 3)), Rational(3, 2));
    EXPECT_EQ(l_factor(triv, 1), zeta_symbolic(1, 2));
    EXPECT_THROW(l_factor(std_char(Family::B, 1), 0, t1, 3), PoleError);
    auto numeric_one = SatakeParam::from_angles(std::vector<double>{0.0});
    EXPECT_THROW(l_factor(std_char(Family::B, 1), 0, numeric_one, 3), PoleError);
    auto v = std::get<std::complex<double>>(l_factor(std_char(Family::B, 1), 2, numeric_one, 3));
    EXPECT_NEAR(v.real(), 729.0 / 512.0, 1e-14);
    EXPECT_EQ(l_factor(std_char(Family::B, 1), 2).evaluate_q(3, std::vector<Rational>{1}), Rational(729, 512));
}

TEST(GradedLValue, Examples) {
    LaurentPoly u4t = LaurentPoly::parse("u^4*t1", 2), u4 = LaurentPoly::parse("u^4", 2),
                u4ti = LaurentPoly::parse("u^4*t1^-1", 2), one(2, 1);
    RationalFunction expected(one, (one - u4t) * (one - u4) * (one - u4ti) * (one - u4));
    EXPECT_EQ(graded_l_value(slice_V_X(3, 1)), expected);
    EXPECT_EQ(graded_l_value(GradedCharacter(2)), RationalFunction(3, 1));
    EXPECT_THROW(graded_l_value(std_char(Family::B, 1)), PoleError);
    auto t = SatakeParam::exact({ExactCoordinate::from_rational(1)});
    EXPECT_EQ(exact_value(graded_l_value(trivial_char(1, 4), t, 3)), Rational(9, 8));
}

TEST(LFactor, WeylInvariance) {
    std::mt19937_64 rng(21);
    for (int a = 1; a <= 3; ++a) {
        auto rs = build_root_system(Family::B, a);
        const auto group = enumerate_weyl_group(rs);
        std::vector<GradedCharacter> chars{std_char(Family::B, a).with_grade(2),
                                           adjoint_char(Family::B, a).with_grade(2),
                                           g_mod_a_char(Family::B, a).with_grade(1)};
        for (int k = a + 1; k <= 5; ++k) chars.push_back(slice_closed_form(k, a));
        for (const auto& chi : chars) {
            const RationalFunction sym = graded_l_value(chi);
            const RationalFunction at2 = l_factor(chi, 2);
            for (const auto& w : group) {
                EXPECT_EQ(sym.substitute_signed_permutation(1, w.perm, w.signs), sym);
                EXPECT_EQ(at2.substitute_signed_permutation(1, w.perm, w.signs), at2);
            }
            for (int i = 0; i < 5; ++i) {
                auto t = random_unitary(a, rng).to_numeric();
                const auto base = std::get<std::complex<double>>(graded_l_value(chi, t, 3));
                for (const auto& w : group) {
                    const auto moved = std::get<std::complex<double>>(graded_l_value(chi, weyl_act(w, t), 3));
                    EXPECT_LT(std::abs(moved - base), 1e-12 * std::abs(base));
                }
            }
        }
    }
}

TEST(WeylAct, Examples) {
    auto t = SatakeParam::exact({ExactCoordinate::from_rational(2), ExactCoordinate::from_rational(5)});
    EXPECT_EQ(weyl_act(WeylElement::identity(2), t).exact_coordinates(), t.exact_coordinates());
    auto swapped = weyl_act({{1, 0}, {1, 1}}, t);
    EXPECT_EQ(swapped.exact_coordinates()[0], ExactCoordinate::from_rational(5));
    EXPECT_EQ(swapped.exact_coordinates()[1], ExactCoordinate::from_rational(2));
    auto t1 = SatakeParam::unitary({Rational(1, 5)});
    EXPECT_EQ(weyl_act({{0}, {-1}}, t1).exact_coordinates()[0], ExactCoordinate::root_of_unity(Rational(4, 5)));
}

TEST(LiftSatake, Examples) {
    auto t = SatakeParam::unitary({Rational(1, 7)});
    auto lifted = lift_satake(t, 3, 3);
    ASSERT_EQ(lifted.rank(), 3);
    EXPECT_EQ(lifted.exact_coordinates()[1], ExactCoordinate::from_rational(3));
    EXPECT_EQ(lifted.exact_coordinates()[2], ExactCoordinate::from_rational(1));
    auto t2 = SatakeParam::unitary({Rational(1, 3), Rational(2, 5)});
    EXPECT_EQ(q_exponents(lift_satake(t2, 5, 3), 3), (std::vector<int>{0, 0, 2, 1, 0}));
    EXPECT_EQ(q_exponents(lift_satake(t2, 3, 3), 3), (std::vector<int>{0, 0, 0}));
    EXPECT_THROW(lift_satake(t2, 2, 3), ParameterError);
}

TEST(LiftSatake, StdRestrictionMultiset) {
    std::mt19937_64 rng(5);
    for (int k = 2; k <= 6; ++k) {
        for (int a = 1; a <= k - 1; ++a) {
            for (int i = 0; i < 4; ++i) {
                auto t = random_unitary(a, rng);
                auto lhs = eigenvalue_multiset(std_char(Family::D, k), lift_satake(t, k, 3));
                auto rhs = eigenvalue_multiset(std_char(Family::B, a), t);
                for (int j = 1; j <= k - a - 1; ++j) {
                    rhs.push_back({pow(Rational(3), j), 0});
                    rhs.push_back({pow(Rational(3), -j), 0});
                }
                rhs.push_back({1, 0});
                std::sort(rhs.begin(), rhs.end());
                EXPECT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(GradedLValue, SliceMatchesStdTimesZetas) {
    for (int k = 3; k <= 6; ++k) {
        for (int a = 1; a <= k - 1; ++a) {
            RationalFunction rhs = l_factor(std_char(Family::B, a), k - a);
            for (int j = 1; j <= k - a - 1; ++j) rhs = rhs * zeta_symbolic(2 * j, a + 1);
            EXPECT_TRUE(rf_equal(graded_l_value(slice_closed_form(k, a)), rhs)) << k << "," << a;
        }
    }
}
