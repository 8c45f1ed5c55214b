#include <gtest/gtest.h>

#include "polydiv/errors.hpp"
#include "polydiv/rational.hpp"

using polydiv::Integer;
using polydiv::Rational;

TEST(Rational, CanonicalForm) {
    const Rational r(Integer(6), Integer(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(Integer(0), Integer(-7)).to_string(), "0");
    EXPECT_EQ(Rational(Integer(10), Integer(5)).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(Integer(1), Integer(0)), polydiv::ZeroDivisor);
    EXPECT_THROW((void)(Rational(1) / Rational(0)), polydiv::ZeroDivisor);
    EXPECT_THROW((void)Rational(0).inverse(), polydiv::ZeroDivisor);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-3/6"), Rational(Integer(-1), Integer(2)));
    EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
    EXPECT_THROW((void)Rational::parse("1/0"), polydiv::ZeroDivisor);
    EXPECT_THROW((void)Rational::parse("1/-2"), polydiv::Error);
    EXPECT_THROW((void)Rational::parse("abc"), polydiv::Error);
    EXPECT_THROW((void)Rational::parse(""), polydiv::Error);
}

TEST(Rational, Arithmetic) {
    const Rational half(Integer(1), Integer(2));
    const Rational third(Integer(1), Integer(3));
    EXPECT_EQ(half + third, Rational(Integer(5), Integer(6)));
    EXPECT_EQ(half - third, Rational(Integer(1), Integer(6)));
    EXPECT_EQ(half * third, Rational(Integer(1), Integer(6)));
    EXPECT_EQ(half / third, Rational(Integer(3), Integer(2)));
    EXPECT_EQ(-half, Rational(Integer(-1), Integer(2)));
    EXPECT_LT(third, half);
    EXPECT_GT(Rational(-1).abs(), Rational(0));
}

TEST(Rational, Powers) {
    const Rational r(Integer(-2), Integer(3));
    EXPECT_EQ(r.pow(0), Rational(1));
    EXPECT_EQ(r.pow(3), Rational(Integer(-8), Integer(27)));
    EXPECT_EQ(r.pow(-2), Rational(Integer(9), Integer(4)));
    EXPECT_EQ(r.pow(-3), Rational(Integer(-27), Integer(8)));
    EXPECT_THROW((void)Rational(0).pow(-1), polydiv::ZeroDivisor);
    EXPECT_EQ(polydiv::sign_power(3), Rational(-1));
    EXPECT_EQ(polydiv::sign_power(-3), Rational(-1));
    EXPECT_EQ(polydiv::sign_power(4), Rational(1));
}

TEST(Rational, BitLength) {
    EXPECT_EQ(Rational(0).bit_length(), 1u);
    EXPECT_EQ(Rational(255).bit_length(), 8u);
    EXPECT_EQ(Rational(Integer(1), Integer(1024)).bit_length(), 11u);
}
