#include <gtest/gtest.h>

#include "generators.hpp"
#include "polydiv/text.hpp"

using namespace polydiv;
using namespace polydiv::cli;
using fixtures::PolyGen;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

std::size_t error_column(std::string_view text, const InputLimits& limits = {}) {
    try {
        (void)parse_polynomial(text, limits);
    } catch (const ParseError& e) {
        return e.column();
    }
    ADD_FAILURE() << "no ParseError for '" << text << "'";
    return 0;
}

} // namespace

TEST(ParsePolynomial, HumanSyntax) {
    EXPECT_EQ(parse_polynomial("x^2 - x - 1"), (Polynomial{-1, -1, 1}));
    EXPECT_EQ(parse_polynomial("0"), Polynomial{});
    EXPECT_EQ(parse_polynomial("2x + 3x - 1/2"), (Polynomial{q(-1, 2), 5}));
    EXPECT_EQ(parse_polynomial("x^4"), Polynomial::monomial(1, 4));
    EXPECT_EQ(parse_polynomial("-x^2+1"), (Polynomial{1, 0, -1}));
    EXPECT_EQ(parse_polynomial("3*x^4 - 2x + 1/2"), (Polynomial{q(1, 2), -2, 0, 0, 3}));
    EXPECT_EQ(parse_polynomial("  7  "), Polynomial{7});
    EXPECT_EQ(parse_polynomial("x - x"), Polynomial{});
    EXPECT_EQ(parse_polynomial("4/6x"), (Polynomial{0, q(2, 3)}));
    EXPECT_EQ(parse_polynomial("+x"), (Polynomial{0, 1}));
}

TEST(ParsePolynomial, ListSyntax) {
    EXPECT_EQ(parse_polynomial("[1/2, -2, 0, 0, 3]"), (Polynomial{q(1, 2), -2, 0, 0, 3}));
    EXPECT_EQ(parse_polynomial("[]"), Polynomial{});
    EXPECT_EQ(parse_polynomial("[0, 0]"), Polynomial{});
    EXPECT_EQ(parse_polynomial(" [ -1 ,-1, 1 ] "), (Polynomial{-1, -1, 1}));
}

TEST(ParsePolynomial, ErrorsCarryColumns) {
    EXPECT_EQ(error_column(""), 1u);
    EXPECT_EQ(error_column("x^-2"), 3u);
    EXPECT_EQ(error_column("1/0"), 3u);
    EXPECT_EQ(error_column("x^2 +"), 6u);
    EXPECT_EQ(error_column("x y"), 3u);
    EXPECT_GE(error_column("[1, 2"), 1u);
    EXPECT_GE(error_column("[1, , 2]"), 1u);
    EXPECT_GE(error_column("2x^"), 1u);
}

TEST(ParsePolynomial, ErrorMessageMentionsColumn) {
    try {
        (void)parse_polynomial("x^-2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos) << e.what();
    }
}

TEST(ParsePolynomial, Caps) {
    InputLimits limits;
    limits.max_degree = 5;
    EXPECT_NO_THROW((void)parse_polynomial("x^5", limits));
    EXPECT_THROW((void)parse_polynomial("x^6", limits), LimitExceeded);
    EXPECT_THROW((void)parse_polynomial("[1,2,3,4,5,6,7]", limits), LimitExceeded);
    EXPECT_THROW((void)parse_polynomial("x^99999999999999999999999"), LimitExceeded);
    limits = InputLimits{};
    limits.max_coeff_bits = 16;
    EXPECT_NO_THROW((void)parse_polynomial("65535x", limits));
    EXPECT_THROW((void)parse_polynomial("65536x", limits), LimitExceeded);
}

TEST(RenderPolynomial, Examples) {
    EXPECT_EQ(render_polynomial(Polynomial{}), "0");
    EXPECT_EQ(render_polynomial(Polynomial{2, 1, 1}), "x^2+x+2");
    EXPECT_EQ(render_polynomial(Polynomial{2, 3}), "3x+2");
    EXPECT_EQ(render_polynomial(Polynomial{q(1, 2), -3, q(1, 2)}), "1/2x^2-3x+1/2");
    EXPECT_EQ(render_polynomial(Polynomial{0, 0, -1}), "-x^2");
    EXPECT_EQ(render_polynomial(Polynomial{-5}), "-5");
}

TEST(RenderCoefficients, Examples) {
    EXPECT_EQ(render_coefficients(Polynomial{q(-1, 2), 5}), (std::vector<std::string>{"-1/2", "5"}));
    EXPECT_TRUE(render_coefficients(Polynomial{}).empty());
    EXPECT_EQ(render_coefficient_list(Polynomial{-1, -1, 1}), "[-1, -1, 1]");
    EXPECT_EQ(render_coefficient_list(Polynomial{}), "[]");
}

TEST(TextProperty, RoundTrip) {
    PolyGen gen(81);
    for (int iter = 0; iter < 500; ++iter) {
        const auto p = gen.any_poly(10);
        ASSERT_EQ(parse_polynomial(render_polynomial(p)), p) << render_polynomial(p);
        ASSERT_EQ(parse_polynomial(render_coefficient_list(p)), p) << render_coefficient_list(p);
    }
}
