#include "polydiv/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "polydiv/errors.hpp"

namespace polydiv {

namespace {

const Rational& zero_scalar() {
    static const Rational zero;
    return zero;
}

void strip(std::vector<Rational>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) {
        coeffs.pop_back();
    }
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    strip(coeffs_);
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

const Rational& Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_scalar();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw ZeroDivisor("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Polynomial normalize(std::vector<Rational> coeffs) {
    return Polynomial(std::move(coeffs));
}

Rational evaluate(const Polynomial& p, const Rational& x0) {
    Rational acc;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coeff(i) + q.coeff(i);
    }
    return Polynomial(std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coeff(i) - q.coeff(i);
    }
    return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    std::vector<Rational> out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coeff(i).is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < q.size(); ++j) {
            out[i + j] += p.coeff(i) * q.coeff(j);
        }
    }
    return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : out) {
        x *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial negate(const Polynomial& p) {
    return scale(p, Rational(-1));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << (i ? ", " : "") << p.coeff(i);
    }
    return os << ']';
}

} // namespace polydiv
