#include "polydiv/detengine.hpp"

#include <string>

#include "polydiv/errors.hpp"
#include "polydiv/interpolate.hpp"

namespace polydiv {

namespace {

struct Degrees {
    std::size_t n;
    std::size_t m;
};

Degrees require_dividend(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    if (f.is_zero() || *f.degree() < *g.degree()) {
        throw DegreeTooSmall("determinant formulas need deg f >= deg g");
    }
    return {*f.degree(), *g.degree()};
}

void check_order(std::size_t order, const MatrixLimits& limits) {
    if (order > limits.max_order) {
        throw LimitExceeded("matrix order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(limits.max_order));
    }
}

const Rational& raw_coeff(const Polynomial& g, long long i) {
    static const Rational zero;
    return i < 0 ? zero : g.coeff(static_cast<std::size_t>(i));
}

long long as_signed(std::size_t v) { return static_cast<long long>(v); }

// Fills rows [row0, row0 + order) and columns [col0, col0 + order) with H.
void place_hankel(ExactMatrix& out, const Polynomial& g, std::size_t n, std::size_t m,
                  std::size_t order, std::size_t row0, std::size_t col0) {
    const long long base = 2 * as_signed(m) - as_signed(n);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            out(row0 + i, col0 + j) = raw_coeff(g, base + as_signed(i + j));
        }
    }
}

bool is_trivial_division(const Polynomial& f, const Polynomial& g, DivisionResult& out) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    if (f.is_zero() || *f.degree() < *g.degree()) {
        out = {Polynomial{}, f};
        return true;
    }
    if (*g.degree() == 0) {
        out = {scale(f, g.leading().inverse()), Polynomial{}};
        return true;
    }
    return false;
}

} // namespace

Rational anti_identity_sign(std::size_t t) {
    if (t == 0) {
        throw IndexOutOfRange("anti-identity order must be positive");
    }
    const unsigned long long tt = t;
    return sign_power(static_cast<long long>((tt * (tt - 1) / 2) % 2));
}

ExactMatrix build_hankel(const Polynomial& g, std::size_t n, const MatrixLimits& limits) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    const std::size_t m = *g.degree();
    if (n < m) {
        throw DegreeTooSmall("Hankel matrix needs n >= deg g");
    }
    const std::size_t order = n - m + 1;
    check_order(order, limits);
    ExactMatrix h(order);
    place_hankel(h, g, n, m, order, 0, 0);
    return h;
}

Rational hankel_det_closed(const Polynomial& g, std::size_t n) {
    if (g.is_zero()) {
        throw ZeroDivisor("divisor is the zero polynomial");
    }
    const std::size_t m = *g.degree();
    if (n < m) {
        throw DegreeTooSmall("Hankel matrix needs n >= deg g");
    }
    const std::size_t k = n - m + 1;
    return anti_identity_sign(k) * g.leading().pow(static_cast<long>(k));
}

ExactMatrix build_bordered(const Polynomial& f, const Polynomial& g, const Rational& x0,
                           const MatrixLimits& limits) {
    const auto [n, m] = require_dividend(f, g);
    const std::size_t k = n - m + 1;
    check_order(k + 1, limits);
    ExactMatrix w(k + 1);
    place_hankel(w, g, n, m, k, 0, 0);
    Rational power = 1;
    for (std::size_t j = k; j-- > 0;) {
        w(j, k) = f.coeff(m + j);
        w(k, j) = power;
        power *= x0;
    }
    return w;
}

ExactMatrix build_permuted(const Polynomial& f, const Polynomial& g, const Rational& x0,
                           const MatrixLimits& limits) {
    const auto [n, m] = require_dividend(f, g);
    const std::size_t k = n - m + 1;
    check_order(k + 1, limits);
    ExactMatrix t(k + 1);
    place_hankel(t, g, n, m, k, 1, 1);
    Rational power = 1;
    for (std::size_t j = k; j-- > 0;) {
        t(j + 1, 0) = f.coeff(m + j);
        t(0, j + 1) = power;
        power *= x0;
    }
    return t;
}

ExactMatrix build_hessenberg(const Polynomial& f, const Polynomial& g, const Rational& x0,
                             const MatrixLimits& limits) {
    const auto [n, m] = require_dividend(f, g);
    const std::size_t k = n - m + 1;
    check_order(k + 1, limits);
    ExactMatrix h(k + 1);
    for (std::size_t r = 0; r < k; ++r) {
        h(r, 0) = f.coeff(n - r);
        for (std::size_t c = 1; c <= k; ++c) {
            h(r, c) = raw_coeff(g, as_signed(m + c) - 1 - as_signed(r));
        }
    }
    Rational power = 1;
    for (std::size_t c = k; c >= 1; --c) {
        h(k, c) = power;
        power *= x0;
    }
    return h;
}

Rational det_W_at(const Polynomial& f, const Polynomial& g, const Rational& x0,
                  const MatrixLimits& limits) {
    return det_oracle(build_bordered(f, g, x0, limits));
}

ExactMatrix build_delta_mixed(const DeltaMixedSpec& spec, const MatrixLimits& limits) {
    const auto [n, m] = require_dividend(spec.f, spec.g);
    if (spec.k < 1 || spec.k > n - m + 1) {
        throw IndexOutOfRange("Delta index outside 1..n-m+1");
    }
    check_order(spec.k, limits);
    ExactMatrix d(spec.k);
    for (std::size_t r = 0; r < spec.k; ++r) {
        d(r, 0) = spec.f.coeff(n - r);
        for (std::size_t c = 1; c < spec.k; ++c) {
            d(r, c) = raw_coeff(spec.g, as_signed(m + c) - 1 - as_signed(r));
        }
    }
    return d;
}

std::vector<Rational> delta_mixed_all(const Polynomial& f, const Polynomial& g) {
    const auto [n, m] = require_dividend(f, g);
    const std::size_t count = n - m + 1;
    const Rational& lead = g.leading();

    // weight[r] = (-1)^(r+1) b_m^(r-1), r >= 1
    std::vector<Rational> weight(count + 1);
    Rational power = 1;
    for (std::size_t r = 1; r <= count; ++r) {
        weight[r] = (r % 2 == 1) ? power : -power;
        power *= lead;
    }

    // Expanding along the first column splits each minor into a triangular
    // block (diagonal b_m) and a pure Toeplitz block E_j with entries g_{m-1+c-r}.
    std::vector<Rational> toeplitz(count);
    toeplitz[0] = 1;
    for (std::size_t j = 1; j < count; ++j) {
        Rational acc;
        for (std::size_t r = 1; r <= j && r <= m; ++r) {
            const Rational& gc = g.coeff(m - r);
            if (!gc.is_zero()) {
                acc += weight[r] * gc * toeplitz[j - r];
            }
        }
        toeplitz[j] = std::move(acc);
    }

    std::vector<Rational> delta(count);
    for (std::size_t k = 1; k <= count; ++k) {
        Rational acc;
        for (std::size_t r = 1; r <= k; ++r) {
            const Rational& a = f.coeff(n - r + 1);
            if (!a.is_zero()) {
                acc += weight[r] * a * toeplitz[k - r];
            }
        }
        delta[k - 1] = std::move(acc);
    }
    return delta;
}

Rational delta_mixed(const DeltaMixedSpec& spec) {
    const auto [n, m] = require_dividend(spec.f, spec.g);
    if (spec.k < 1 || spec.k > n - m + 1) {
        throw IndexOutOfRange("Delta index outside 1..n-m+1");
    }
    return delta_mixed_all(spec.f, spec.g)[spec.k - 1];
}

Rational hessenberg_det_expansion(const Polynomial& f, const Polynomial& g, const Rational& x0) {
    const auto [n, m] = require_dividend(f, g);
    const std::size_t t = n - m + 2;
    const auto delta = delta_mixed_all(f, g);
    const Rational step = -(x0 * g.leading());
    Rational acc;
    Rational factor = 1; // (-x0 b_m)^(t-i)
    for (std::size_t i = t; i >= 2; --i) {
        acc += factor * delta[i - 2];
        factor *= step;
    }
    return acc;
}

Polynomial quotient_from_dets(const Polynomial& f, const Polynomial& g) {
    const auto [n, m] = require_dividend(f, g);
    const std::size_t t = n - m + 2;
    const auto delta = delta_mixed_all(f, g);
    const Rational inv_lead = g.leading().inverse();
    std::vector<Rational> d(n - m + 1);
    for (std::size_t j = 0; j <= n - m; ++j) {
        // b_m^(j+1-t) = (1/b_m)^(t-1-j)
        const std::size_t k = t - 1 - j;
        d[j] = sign_power(static_cast<long long>(t - j)) * inv_lead.pow(static_cast<long>(k)) *
               delta[k - 1];
    }
    return Polynomial(std::move(d));
}

Polynomial quotient_ratio(const Polynomial& f, const Polynomial& g, const MatrixLimits& limits) {
    const auto [n, m] = require_dividend(f, g);
    const Rational neg_inv_det_h = -det_oracle(build_hankel(g, n, limits)).inverse();
    const auto nodes = interpolation_nodes(n - m + 1);
    std::vector<Rational> values;
    values.reserve(nodes.size());
    for (const auto& x0 : nodes) {
        values.push_back(det_W_at(f, g, x0, limits) * neg_inv_det_h);
    }
    return interpolate(nodes, values);
}

ExactMatrix build_delta_pure(const DeltaPureSpec& spec, DeltaSign sign,
                             const MatrixLimits& limits) {
    if (spec.k == 0) {
        throw IndexOutOfRange("Delta order must be positive");
    }
    check_order(spec.k, limits);
    const long long m = as_signed(spec.views.degree());
    const bool flipped = sign == DeltaSign::flipped;
    ExactMatrix d(spec.k);
    for (std::size_t r = 0; r < spec.k; ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            const Rational& tail = spec.views.negated(m - 1 - as_signed(r - c));
            d(r, c) = flipped ? tail : -tail;
        }
        if (r + 1 < spec.k) {
            d(r, r + 1) = flipped ? -spec.views.lead : spec.views.lead;
        }
    }
    return d;
}

Rational delta_pure_direct(const DeltaPureSpec& spec, DeltaSign sign,
                           const MatrixLimits& limits) {
    return det_oracle(build_delta_pure(spec, sign, limits));
}

Rational delta_pure_closed(const DeltaPureSpec& spec, DeltaSign sign) {
    if (spec.k == 0) {
        throw IndexOutOfRange("Delta order must be positive");
    }
    const long long m = as_signed(spec.views.degree());
    const long long k = as_signed(spec.k);
    const auto t = t_sequence(spec.views, spec.k);
    Rational sum;
    for (long long i = 1; i <= k; ++i) {
        const Rational& c = spec.views.negated(m - (k + 1) + i);
        if (!c.is_zero()) {
            sum += t[static_cast<std::size_t>(i)] * c;
        }
    }
    Rational result = spec.views.lead.pow(static_cast<long>(k)) * sum;
    if (sign == DeltaSign::standard) {
        result *= sign_power(k);
    }
    return result;
}

DivisionResult divide_det_formula(const Polynomial& f, const Polynomial& g) {
    DivisionResult out;
    if (is_trivial_division(f, g, out)) {
        return out;
    }
    Polynomial q = quotient_from_dets(f, g);
    Polynomial r = remainder_closed(f, g, q);
    return {std::move(q), std::move(r)};
}

DivisionResult divide_det_ratio(const Polynomial& f, const Polynomial& g,
                                const MatrixLimits& limits) {
    DivisionResult out;
    if (is_trivial_division(f, g, out)) {
        return out;
    }
    Polynomial q = quotient_ratio(f, g, limits);
    Polynomial r = remainder_closed(f, g, q);
    return {std::move(q), std::move(r)};
}

} // namespace polydiv
