#include <gtest/gtest.h>

#include "generators.hpp"
#include "polydiv/errors.hpp"
#include "polydiv/polynomial.hpp"

using namespace polydiv;

namespace {
Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }
} // namespace

TEST(Polynomial, NormalizeStripsTrailingZeros) {
    const auto p = normalize({1, 2, 0, 0});
    EXPECT_EQ(p, (Polynomial{1, 2}));
    EXPECT_EQ(p.degree(), 1u);

    const auto zero = normalize({0, 0});
    EXPECT_TRUE(zero.is_zero());
    EXPECT_FALSE(zero.degree().has_value());
    EXPECT_EQ(zero, Polynomial{});

    EXPECT_EQ(normalize({q(1, 2)}), Polynomial{q(1, 2)});
    EXPECT_EQ(normalize({q(1, 2)}).degree(), 0u);
}

TEST(Polynomial, CoefficientAccess) {
    const Polynomial p{3, 0, 5};
    EXPECT_EQ(p.coeff(2), Rational(5));
    EXPECT_EQ(p.coeff(10), Rational(0));
    EXPECT_EQ(p.leading(), Rational(5));
    EXPECT_THROW((void)Polynomial{}.leading(), ZeroDivisor);
    EXPECT_EQ(Polynomial::monomial(4, 3), (Polynomial{0, 0, 0, 4}));
    EXPECT_TRUE(Polynomial::monomial(0, 3).is_zero());
}

TEST(Polynomial, Evaluate) {
    EXPECT_EQ(evaluate(Polynomial{1, 0, 1}, 2), Rational(5));
    EXPECT_EQ(evaluate(Polynomial{7, 3, 9}, 0), Rational(7));
    EXPECT_EQ(evaluate(Polynomial{q(-1, 2), 3}, q(1, 3)), q(1, 2));
    EXPECT_EQ(evaluate(Polynomial{}, 5), Rational(0));
}

TEST(Polynomial, RingOperations) {
    EXPECT_EQ(mul(Polynomial{-1, 1}, Polynomial{1, 1}), (Polynomial{-1, 0, 1}));
    const Polynomial p{1, q(2, 3), -4};
    EXPECT_EQ(add(p, Polynomial{}), p);
    EXPECT_TRUE(scale(p, 0).is_zero());
    EXPECT_TRUE(sub(p, p).is_zero());
    EXPECT_EQ(add(Polynomial{1, 1}, Polynomial{0, -1}), Polynomial{1});
    EXPECT_EQ(-p, (Polynomial{-1, q(-2, 3), 4}));
    EXPECT_TRUE(mul(p, Polynomial{}).is_zero());
}

TEST(PolynomialProperty, NormalizeIsIdempotent) {
    fixtures::PolyGen gen(11);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Rational> raw(gen.index(0, 8));
        for (auto& c : raw) {
            c = gen.integer(0, 2) == 0 ? Rational(0) : gen.rational();
        }
        const auto once = normalize(raw);
        const auto twice = normalize({once.coeffs().begin(), once.coeffs().end()});
        ASSERT_EQ(once, twice);
        if (!once.is_zero()) {
            ASSERT_FALSE(once.leading().is_zero());
        }
    }
}

TEST(PolynomialProperty, EvaluateIsARingHomomorphism) {
    fixtures::PolyGen gen(12);
    for (int iter = 0; iter < 200; ++iter) {
        const auto p = gen.any_poly(6);
        const auto r = gen.any_poly(6);
        const auto x0 = gen.rational(5, 3);
        ASSERT_EQ(evaluate(mul(p, r), x0), evaluate(p, x0) * evaluate(r, x0));
        ASSERT_EQ(evaluate(add(p, r), x0), evaluate(p, x0) + evaluate(r, x0));
    }
}
