#pragma once

#include <cstddef>
#include <vector>

#include "polydiv/polynomial.hpp"

namespace polydiv {

/// Quotient and remainder of a Euclidean division f = g*q + r,
/// with r zero or deg r < deg g.
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;

    friend bool operator==(const DivisionResult&, const DivisionResult&) = default;
};

/// Three readings of a divisor g = g_m x^m + ... + g_0.
///
///   lead          b_m = g_m (nonzero)
///   monic_tail    beta_i = g_i / b_m,   i < m   (g / b_m = x^m + sum beta_i x^i)
///   negated_tail  c_i    = -g_i,        i < m   (g = b_m x^m - sum c_i x^i)
///
/// The recurrences and closed forms are all written against negated_tail.
/// Tail accessors read zero outside 0..m-1, including negative indices.
struct DivisorViews {
    Polynomial raw;
    Rational lead;
    std::vector<Rational> monic_tail;
    std::vector<Rational> negated_tail;

    [[nodiscard]] std::size_t degree() const { return negated_tail.size(); }
    [[nodiscard]] const Rational& beta(long long i) const;
    [[nodiscard]] const Rational& negated(long long i) const;
    /// Raw coefficient g_i with zero for i < 0 or i > m.
    [[nodiscard]] const Rational& raw_at(long long i) const;
};

/// Throws ZeroDivisor when g is the zero polynomial.
[[nodiscard]] DivisorViews divisor_views(const Polynomial& g);

/// Schoolbook long division. This is the reference every other method is
/// checked against.
[[nodiscard]] DivisionResult long_divide(const Polynomial& f, const Polynomial& g);

/// Divides by the monic associate g / b_m, then rescales the quotient by 1/b_m.
/// The remainder is unchanged.
[[nodiscard]] DivisionResult monic_reduction(const Polynomial& f, const Polynomial& g);

/// True when f == g*q + r and r is zero or of lower degree than g.
[[nodiscard]] bool satisfies_division_identity(const Polynomial& f, const Polynomial& g,
                                               const DivisionResult& result);

} // namespace polydiv
