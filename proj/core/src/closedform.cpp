#include "polydiv/closedform.hpp"

#include <algorithm>
#include <string>

#include "polydiv/errors.hpp"

namespace polydiv {

namespace {

// terms[r-1] = scale * sum_{i=1}^{r-1} coeff(m-i) * terms[r-1-i], first term given.
template <class Coeff>
std::vector<Rational> unroll(std::size_t count, std::size_t m, const Rational& first,
                             const Rational& factor, Coeff coeff) {
    if (count == 0) {
        throw IndexOutOfRange("sequence length must be positive");
    }
    std::vector<Rational> terms;
    terms.reserve(count);
    terms.push_back(first);
    for (std::size_t r = 2; r <= count; ++r) {
        Rational acc;
        // coefficients with m - i < 0 vanish, so i runs to min(r-1, m)
        const std::size_t upper = std::min(r - 1, m);
        for (std::size_t i = 1; i <= upper; ++i) {
            const Rational& c = coeff(static_cast<long long>(m - i));
            if (!c.is_zero()) {
                acc += c * terms[r - 1 - i];
            }
        }
        terms.push_back(acc * factor);
    }
    return terms;
}

void require_quotient_degrees(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    if (f.is_zero() || *f.degree() < *g.degree()) {
        throw DegreeTooSmall("closed-form quotient needs deg f >= deg g");
    }
}

} // namespace

const Rational& RecurrentSequence::at(std::size_t r) const {
    if (r == 0 || r > terms_.size()) {
        throw IndexOutOfRange("sequence index " + std::to_string(r) + " outside 1.." +
                              std::to_string(terms_.size()));
    }
    return terms_[r - 1];
}

RecurrentSequence s_sequence(const DivisorViews& views, std::size_t count) {
    const Rational inv_lead = views.lead.inverse();
    auto terms = unroll(count, views.degree(), Rational(1), Rational(1),
                        [&](long long j) -> Rational { return views.negated(j) * inv_lead; });
    return {SequenceKind::s_monic, views, std::move(terms)};
}

RecurrentSequence t_sequence(const DivisorViews& views, std::size_t count) {
    const Rational inv_lead = views.lead.inverse();
    auto terms = unroll(count, views.degree(), inv_lead, inv_lead,
                        [&](long long j) -> const Rational& { return views.negated(j); });
    return {SequenceKind::t_general, views, std::move(terms)};
}

Polynomial quotient_closed(const Polynomial& f, const RecurrentSequence& t) {
    const Polynomial& g = t.source_views().raw;
    require_quotient_degrees(f, g);
    const std::size_t n = *f.degree();
    const std::size_t m = *g.degree();
    const std::size_t span = n - m;
    if (t.size() < span + 1) {
        throw IndexOutOfRange("t-sequence shorter than n-m+1");
    }
    std::vector<Rational> d(span + 1);
    for (std::size_t k = 0; k <= span; ++k) {
        Rational acc;
        for (std::size_t j = 0; j <= k; ++j) {
            const Rational& a = f.coeff(n - j);
            if (!a.is_zero()) {
                acc += t[k + 1 - j] * a;
            }
        }
        d[span - k] = std::move(acc);
    }
    return Polynomial(std::move(d));
}

Polynomial quotient_closed(const Polynomial& f, const Polynomial& g) {
    require_quotient_degrees(f, g);
    const auto views = divisor_views(g);
    return quotient_closed(f, t_sequence(views, *f.degree() - *g.degree() + 1));
}

Polynomial remainder_closed(const Polynomial& f, const Polynomial& g, const Polynomial& q) {
    const auto views = divisor_views(g);
    const std::size_t m = views.degree();
    std::vector<Rational> r(m);
    for (std::size_t k = 0; k < m; ++k) {
        Rational acc = f.coeff(k);
        for (std::size_t i = 0; i <= k; ++i) {
            const Rational& d = q.coeff(k - i);
            if (!d.is_zero()) {
                acc += views.negated_tail[i] * d;
            }
        }
        r[k] = std::move(acc);
    }
    return Polynomial(std::move(r));
}

DivisionResult divide_closed(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    if (f.is_zero() || *f.degree() < *g.degree()) {
        return {Polynomial{}, f};
    }
    if (*g.degree() == 0) {
        return {scale(f, g.leading().inverse()), Polynomial{}};
    }
    const auto views = divisor_views(g);
    const auto t = t_sequence(views, *f.degree() - *g.degree() + 1);
    Polynomial q = quotient_closed(f, t);
    Polynomial r = remainder_closed(f, g, q);
    return {std::move(q), std::move(r)};
}

} // namespace polydiv
