#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polydiv {

using Integer = mpz_class;

/// Exact rational number in canonical form: positive denominator, numerator
/// and denominator coprime. Backed by GMP.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    Rational(const Integer& value) : value_(value) {}

    /// Throws ZeroDivisor when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p" or "p/q" with an optional leading sign on p.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Bit length of the larger of |numerator| and denominator.
    [[nodiscard]] std::size_t bit_length() const;

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational inverse() const;
    /// Integer power; negative exponents invert (throws ZeroDivisor on 0).
    [[nodiscard]] Rational pow(long exponent) const;

    /// "num" for integers, "num/den" otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator-(const Rational& x);
    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class value_;
};

/// (-1)^exponent as a Rational.
[[nodiscard]] inline Rational sign_power(long long exponent) {
    return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

} // namespace polydiv
