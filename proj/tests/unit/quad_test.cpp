#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/lfactors/l_factors.hpp"
#include "plancheck/quad/plancherel.hpp"

using namespace plancheck;

namespace {

TorusPoint random_point(int a, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    TorusPoint t;
    for (int i = 0; i < a; ++i) t.angles.push_back(u(rng));
    return t;
}

}  // namespace

TEST(MacdonaldDensity, Examples) {
    EXPECT_NEAR(macdonald_density(1, 3, {{0.0}}), 0.0, 1e-300);
    EXPECT_NEAR(macdonald_density(1, 3, {{0.5}}), 27.0 / 16.0, 1e-14);
    EXPECT_NEAR(macdonald_density(2, 3, {{0.0, 0.37}}), 0.0, 1e-300);
    EXPECT_NEAR(macdonald_density(2, 3, {{0.21, 0.0}}), 0.0, 1e-300);
}

TEST(MacdonaldDensity, RealFormMatchesComplexLFactors) {
    std::mt19937_64 rng(3);
    for (int a = 1; a <= 3; ++a) {
        for (int i = 0; i < 200; ++i) {
            auto t = random_point(a, rng);
            const double real_form = macdonald_density(a, 3, t);
            const auto complex_form = macdonald_density_complex(a, 3, t);
            EXPECT_LT(std::abs(complex_form.imag()), 1e-12);
            EXPECT_NEAR(complex_form.real(), real_form, 1e-12 * std::max(1.0, real_form));
        }
    }
}

TEST(MacdonaldDensity, WeylInvariantAndNonnegative) {
    std::mt19937_64 rng(9);
    for (int a = 1; a <= 3; ++a) {
        const auto group = enumerate_weyl_group(build_root_system(Family::B, a));
        for (int i = 0; i < 20; ++i) {
            auto t = random_point(a, rng);
            const double base = macdonald_density(a, 5, t);
            for (const auto& w : group) {
                // (w·t)_i = t_{perm[i]}^{signs[i]} on angles.
                TorusPoint moved{std::vector<double>(static_cast<std::size_t>(a))};
                for (int j = 0; j < a; ++j) {
                    moved.angles[static_cast<std::size_t>(j)] = w.signs[static_cast<std::size_t>(j)] *
                                                                t.angles[static_cast<std::size_t>(w.perm[static_cast<std::size_t>(j)])];
                }
                EXPECT_NEAR(macdonald_density(a, 5, moved), base, 1e-12 * std::max(1.0, base));
            }
        }
        for (int i = 0; i < 10000; ++i) EXPECT_GE(macdonald_density(a, 3, random_point(a, rng)), 0.0);
    }
}

TEST(IntegrateTorus, Examples) {
    for (int a = 1; a <= 3; ++a) {
        EXPECT_EQ(integrate_torus([](const TorusPoint&) { return 1.0; }, a, {16, 1}), 1.0);
    }
    const double c = integrate_torus([](const TorusPoint& t) { return std::cos(2 * std::numbers::pi * t.angles[0]); },
                                     1, {64, 1});
    EXPECT_NEAR(c, 0.0, 1e-15);
    EXPECT_THROW(integrate_torus([](const TorusPoint&) { return 1.0; }, 1, {12, 1}), ParameterError);
    EXPECT_THROW(integrate_torus([](const TorusPoint&) { return 1.0; }, 1, {4, 1}), ParameterError);
    EXPECT_THROW(integrate_torus([](const TorusPoint&) { return 1.0; }, 4, {8, 1}), ParameterError);
    EXPECT_THROW(integrate_torus([](const TorusPoint&) { return 1.0; }, 3, {1024, 1}), ParameterError);
}

TEST(IntegrateTorus, IndependentOfJobs) {
    auto f = [](const TorusPoint& t) { return macdonald_density(2, 3, t); };
    const double one = integrate_torus(f, 2, {128, 1});
    for (int jobs : {2, 3, 8}) EXPECT_EQ(integrate_torus(f, 2, {128, jobs}), one);
}

TEST(ResidueOracle, Values) {
    EXPECT_EQ(residue_mass_rank1(Rational(1, 3)), Rational(9, 8));
    EXPECT_EQ(residue_mass_rank1(Rational(1, 9)), Rational(81, 80));
    EXPECT_EQ(residue_mass_rank1(Rational(1, 5)), Rational(25, 24));
    EXPECT_THROW(residue_mass_rank1(Rational(1)), ParameterError);
    EXPECT_THROW(residue_mass_rank1(Rational(0)), ParameterError);
}

TEST(PlancherelMass, RankOneAgainstResidues) {
    for (long q : {3L, 5L}) {
        const double expected = to_double(residue_mass_rank1(Rational(1, q)));
        EXPECT_NEAR(plancherel_mass(1, q, {4096, 1}), expected, 1e-10);
        for (int n : {2048, 4096}) {
            EXPECT_LT(std::abs(plancherel_mass(1, q, {n, 1}) - plancherel_mass(1, q, {2 * n, 1})), 1e-10);
        }
    }
}

TEST(PlancherelMass, RankTwo) {
    EXPECT_NEAR(plancherel_mass(2, 3, {512, 1}), to_double(motive_delta(Family::C, 2, 3)), 1e-8);
}

TEST(PlancherelMass, CheckedFlagsCoarseResolution) {
    auto f = [](const TorusPoint& t) { return macdonald_density(1, 3, t); };
    EXPECT_TRUE(integrate_torus_checked(f, 1, {4096, 1}, 1e-12).converged);
    EXPECT_FALSE(integrate_torus_checked(f, 1, {16, 1}, 1e-12).converged);
}

TEST(SliceDensity, MatchesIntegrandTimesMacdonald) {
    std::mt19937_64 rng(17);
    for (int a = 1; a <= 2; ++a) {
        for (int k = a + 1; k <= 5; ++k) {
            const auto slice = slice_closed_form(k, a);
            for (int i = 0; i < 20; ++i) {
                auto t = random_point(a, rng);
                auto param = SatakeParam::numeric(t.coordinates());
                auto l_std = std::get<std::complex<double>>(l_factor(std_char(Family::B, a), k - a, param, 3));
                auto l_ad = std::get<std::complex<double>>(l_factor(adjoint_char(Family::B, a), 1, param, 3));
                double zetas = 1;
                for (int j = 1; j <= k - a - 1; ++j) zetas *= to_double(zeta(2 * j, 3));
                const double expected = (l_std / l_ad).real() * zetas * macdonald_density(a, 3, t);
                EXPECT_NEAR(slice_density(slice, 3, t), expected, 1e-12 * std::max(1.0, std::abs(expected)));
            }
        }
    }
}

TEST(DensityCsv, Format) {
    std::ostringstream out;
    write_density_csv(out, 1, 8, [](const TorusPoint& t) { return macdonald_density(1, 3, t); });
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "theta_1,density");
    std::getline(in, line);
    EXPECT_EQ(line, "0,0");
    int rows = 1;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 8);
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
}
