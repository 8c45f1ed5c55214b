#include "polydiv/division.hpp"

#include "polydiv/errors.hpp"

namespace polydiv {

namespace {

const Rational& zero_scalar() {
    static const Rational zero;
    return zero;
}

const Rational& tail_at(const std::vector<Rational>& tail, long long i) {
    if (i < 0 || i >= static_cast<long long>(tail.size())) {
        return zero_scalar();
    }
    return tail[static_cast<std::size_t>(i)];
}

} // namespace

const Rational& DivisorViews::beta(long long i) const { return tail_at(monic_tail, i); }

const Rational& DivisorViews::negated(long long i) const { return tail_at(negated_tail, i); }

const Rational& DivisorViews::raw_at(long long i) const {
    if (i < 0) {
        return zero_scalar();
    }
    return raw.coeff(static_cast<std::size_t>(i));
}

DivisorViews divisor_views(const Polynomial& g) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    const std::size_t m = *g.degree();
    DivisorViews views{g, g.leading(), {}, {}};
    views.monic_tail.reserve(m);
    views.negated_tail.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        views.monic_tail.push_back(g.coeff(i) / views.lead);
        views.negated_tail.push_back(-g.coeff(i));
    }
    return views;
}

DivisionResult long_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    const std::size_t m = *g.degree();
    if (f.is_zero() || *f.degree() < m) {
        return {Polynomial{}, f};
    }
    const std::size_t n = *f.degree();
    const Rational& lead = g.leading();

    std::vector<Rational> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Rational> quot(n - m + 1);
    for (std::size_t k = n - m + 1; k-- > 0;) {
        // rem[k + m] is the current leading term
        const Rational c = rem[k + m] / lead;
        quot[k] = c;
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            rem[k + i] -= c * g.coeff(i);
        }
    }
    rem.resize(m);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

DivisionResult monic_reduction(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    const Rational lead = g.leading();
    const Rational inv = lead.inverse();
    auto [q1, r1] = long_divide(f, scale(g, inv));
    return {scale(q1, inv), std::move(r1)};
}

bool satisfies_division_identity(const Polynomial& f, const Polynomial& g,
                                 const DivisionResult& result) {
    if (g.is_zero()) {
        return false;
    }
    if (!result.remainder.is_zero() && *result.remainder.degree() >= *g.degree()) {
        return false;
    }
    return add(mul(g, result.quotient), result.remainder) == f;
}

} // namespace polydiv
