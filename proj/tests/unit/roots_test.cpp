#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/roots/root_system.hpp"

using namespace plancheck;

TEST(RootSystem, Examples) {
    EXPECT_EQ(build_root_system(Family::B, 2).roots.size(), 8u);
    auto b1 = build_root_system(Family::B, 1);
    EXPECT_EQ(b1.roots, (std::vector<Weight>{{-1}, {1}}));
    auto d3 = build_root_system(Family::D, 3);
    EXPECT_EQ(d3.roots.size(), 12u);
    EXPECT_EQ(d3.lie_algebra_dimension(), 15);
    EXPECT_THROW(build_root_system(Family::D, 1), ParameterError);
    EXPECT_THROW(build_root_system(Family::B, 0), ParameterError);
}

TEST(RootSystem, CountsAndNegationClosure) {
    for (Family f : {Family::B, Family::C, Family::D}) {
        for (int r = (f == Family::D ? 2 : 1); r <= 6; ++r) {
            auto rs = build_root_system(f, r);
            const std::size_t expected = f == Family::D ? 2 * r * (r - 1) : 2 * r * r;
            EXPECT_EQ(rs.roots.size(), expected);
            EXPECT_EQ(rs.positive_roots().size() * 2, expected);
            std::set<Weight> set(rs.roots.begin(), rs.roots.end());
            for (auto w : rs.roots) {
                for (auto& x : w) x = -x;
                EXPECT_TRUE(set.count(w));
            }
            const int expected_dim = f == Family::D ? r * (2 * r - 1) : r * (2 * r + 1);
            EXPECT_EQ(rs.lie_algebra_dimension(), expected_dim);
        }
    }
}

TEST(WeylGroup, OrdersAndDegrees) {
    EXPECT_EQ(weyl_group_order(build_root_system(Family::B, 1)), 2);
    EXPECT_EQ(weyl_group_order(build_root_system(Family::B, 2)), 8);
    EXPECT_EQ(weyl_group_order(build_root_system(Family::D, 3)), 24);
    EXPECT_EQ(degrees(build_root_system(Family::C, 1)), (std::vector<int>{2}));
    EXPECT_EQ(degrees(build_root_system(Family::C, 2)), (std::vector<int>{2, 4}));
    EXPECT_EQ(degrees(build_root_system(Family::D, 3)), (std::vector<int>{2, 4, 3}));
    for (Family f : {Family::B, Family::C, Family::D}) {
        for (int r = (f == Family::D ? 2 : 1); r <= 6; ++r) {
            auto rs = build_root_system(f, r);
            std::int64_t product = 1;
            for (int d : degrees(rs)) product *= d;
            EXPECT_EQ(product, weyl_group_order(rs));
        }
    }
}

TEST(WeylGroup, EnumerationMatchesOrder) {
    for (Family f : {Family::B, Family::C, Family::D}) {
        for (int r = (f == Family::D ? 2 : 1); r <= 4; ++r) {
            auto rs = build_root_system(f, r);
            auto group = enumerate_weyl_group(rs);
            EXPECT_EQ(static_cast<std::int64_t>(group.size()), weyl_group_order(rs));
            if (f == Family::D) {
                EXPECT_EQ(static_cast<std::int64_t>(enumerate_weyl_group(rs, true).size()),
                          2 * weyl_group_order(rs));
            }
        }
    }
    EXPECT_THROW(enumerate_weyl_group(build_root_system(Family::B, 5)), ParameterError);
}

TEST(WeylGroup, RootSetsStable) {
    for (Family f : {Family::B, Family::C, Family::D}) {
        for (int r = (f == Family::D ? 2 : 1); r <= 3; ++r) {
            auto rs = build_root_system(f, r);
            for (const auto& w : enumerate_weyl_group(rs, f == Family::D)) {
                std::vector<Weight> image;
                for (const auto& root : rs.roots) image.push_back(act_on_weight(w, root));
                std::sort(image.begin(), image.end());
                EXPECT_EQ(image, rs.roots);
            }
        }
    }
}

TEST(WeylGroup, RandomElementsAreValid) {
    std::mt19937_64 rng(11);
    auto d5 = build_root_system(Family::D, 5);
    for (int i = 0; i < 50; ++i) {
        auto w = random_weyl_element(d5, rng);
        EXPECT_TRUE(is_weyl_element(d5, w));
        EXPECT_EQ(w.sign_product(), 1);
    }
}
