#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polydiv/polynomial.hpp"

namespace polydiv::fixtures {

/// Deterministic random polynomials for property tests.
class PolyGen {
public:
    explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    long nonzero(long lo, long hi) {
        long v = 0;
        while (v == 0) {
            v = integer(lo, hi);
        }
        return v;
    }

    /// p/q with p in [-num, num], q in [1, den].
    Rational rational(long num = 9, long den = 4) {
        return Rational(Integer(integer(-num, num)), Integer(integer(1, den)));
    }

    Rational nonzero_rational(long num = 9, long den = 4) {
        Rational r;
        while (r.is_zero()) {
            r = rational(num, den);
        }
        return r;
    }

    /// Exactly `degree` with integer coefficients in [lo, hi]; leading nonzero.
    Polynomial integer_poly(std::size_t degree, long lo = -9, long hi = 9) {
        std::vector<Rational> c(degree + 1);
        for (std::size_t i = 0; i < degree; ++i) {
            c[i] = integer(lo, hi);
        }
        c[degree] = nonzero(lo, hi);
        return Polynomial(std::move(c));
    }

    /// Exactly `degree` with small rational coefficients; leading nonzero.
    Polynomial rational_poly(std::size_t degree) {
        std::vector<Rational> c(degree + 1);
        for (std::size_t i = 0; i < degree; ++i) {
            c[i] = rational();
        }
        c[degree] = nonzero_rational();
        return Polynomial(std::move(c));
    }

    /// Anything up to `max_degree`, including the zero polynomial.
    Polynomial any_poly(std::size_t max_degree) {
        if (integer(0, 9) == 0) {
            return {};
        }
        return rational_poly(index(0, max_degree));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace polydiv::fixtures
