#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "polydiv/rational.hpp"

namespace polydiv {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending order of power. The coefficient vector never ends in a zero;
/// the zero polynomial is the empty vector and has no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// c * x^power
    static Polynomial monomial(const Rational& c, std::size_t power);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    /// Empty for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const;

    /// Coefficient of x^i; zero beyond the stored range.
    [[nodiscard]] const Rational& coeff(std::size_t i) const;
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeff(i); }

    /// Throws ZeroDivisor on the zero polynomial.
    [[nodiscard]] const Rational& leading() const;

    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Strips trailing zeros.
[[nodiscard]] Polynomial normalize(std::vector<Rational> coeffs);

/// Horner evaluation at x0.
[[nodiscard]] Rational evaluate(const Polynomial& p, const Rational& x0);

[[nodiscard]] Polynomial add(const Polynomial& p, const Polynomial& q);
[[nodiscard]] Polynomial sub(const Polynomial& p, const Polynomial& q);
[[nodiscard]] Polynomial mul(const Polynomial& p, const Polynomial& q);
[[nodiscard]] Polynomial scale(const Polynomial& p, const Rational& c);
[[nodiscard]] Polynomial negate(const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator-(const Polynomial& p) { return negate(p); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(const Rational& c, const Polynomial& p) { return scale(p, c); }
inline Polynomial operator*(const Polynomial& p, const Rational& c) { return scale(p, c); }

/// Debug form: ascending coefficient list, e.g. [1, 0, 1/2].
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace polydiv
