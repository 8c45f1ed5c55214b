#include "polydiv/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "polydiv/errors.hpp"

namespace polydiv {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw ZeroDivisor("rational with zero denominator");
    }
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw Error("malformed rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(integer_from(num_text));
    }
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+' ||
        !is_integer_literal(den_text)) {
        throw Error("malformed rational: '" + std::string(text) + "'");
    }
    return Rational(integer_from(num_text), integer_from(den_text));
}

std::size_t Rational::bit_length() const {
    const mpz_class& num = value_.get_num();
    const std::size_t num_bits = sgn(num) == 0 ? 0 : mpz_sizeinbase(num.get_mpz_t(), 2);
    const std::size_t den_bits = mpz_sizeinbase(value_.get_den().get_mpz_t(), 2);
    return std::max(num_bits, den_bits);
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw ZeroDivisor("inverse of zero");
    }
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::pow(long exponent) const {
    Rational base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    Rational r;
    mpz_pow_ui(r.value_.get_num_mpz_t(), base.value_.get_num_mpz_t(), e);
    mpz_pow_ui(r.value_.get_den_mpz_t(), base.value_.get_den_mpz_t(), e);
    // numerator and denominator stay coprime and the denominator positive
    return r;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str(10);
    }
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw ZeroDivisor();
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
}

} // namespace polydiv
