#include <gtest/gtest.h>

#include "generators.hpp"
#include "polydiv/errors.hpp"
#include "polydiv/interpolate.hpp"

using namespace polydiv;

TEST(Interpolation, NodesAlternateAroundZero) {
    EXPECT_EQ(interpolation_nodes(5), (std::vector<Rational>{0, 1, -1, 2, -2}));
    EXPECT_TRUE(interpolation_nodes(0).empty());
}

// q(0) = 2, q(1) = 4, q(-1) = 2 determine x^2 + x + 2.
TEST(Interpolation, ThreePointsHandWorked) {
    const std::vector<Rational> nodes{0, 1, -1};
    const std::vector<Rational> values{2, 4, 2};
    EXPECT_EQ(interpolate(nodes, values), (Polynomial{2, 1, 1}));
}

TEST(Interpolation, ConstantAndZero) {
    const std::vector<Rational> one_node{5};
    EXPECT_EQ(interpolate(one_node, std::vector<Rational>{7}), Polynomial{7});
    const std::vector<Rational> nodes{0, 1, -1};
    EXPECT_TRUE(interpolate(nodes, std::vector<Rational>{0, 0, 0}).is_zero());
}

TEST(Interpolation, Errors) {
    const std::vector<Rational> nodes{1, 1};
    EXPECT_THROW((void)interpolate(nodes, std::vector<Rational>{1, 2}), ZeroDivisor);
    EXPECT_THROW((void)interpolate(nodes, std::vector<Rational>{1}), IndexOutOfRange);
    EXPECT_THROW((void)interpolate(std::vector<Rational>{}, std::vector<Rational>{}),
                 IndexOutOfRange);
}

TEST(InterpolationProperty, RecoversPolynomial) {
    fixtures::PolyGen gen(51);
    for (int iter = 0; iter < 100; ++iter) {
        const auto p = gen.any_poly(10);
        const std::size_t count = (p.is_zero() ? 0 : *p.degree()) + 1 + gen.index(0, 2);
        const auto nodes = interpolation_nodes(count);
        std::vector<Rational> values;
        for (const auto& x : nodes) {
            values.push_back(evaluate(p, x));
        }
        ASSERT_EQ(interpolate(nodes, values), p);
    }
}
