#pragma once

#include <cstddef>
#include <vector>

#include "polydiv/division.hpp"

namespace polydiv {

enum class SequenceKind {
    s_monic,   ///< s_1 = 1, recurrence over the monic divisor g / b_m
    t_general, ///< t_1 = 1/b_m, recurrence over g itself
};

/// Linear recurrent sequence attached to a divisor, indexed from 1.
///
/// With c_j the negated tail of g (c_j = 0 for j < 0):
///   t_1 = 1/b_m,  t_r = (1/b_m) * sum_{i=1}^{r-1} c_{m-i} t_{r-i}
/// and s is the same recurrence for the monic divisor, so b_m * t_r = s_r.
/// Equivalently t_r is the coefficient of y^(r-1) in 1 / (y^m g(1/y)).
class RecurrentSequence {
public:
    RecurrentSequence(SequenceKind kind, DivisorViews views, std::vector<Rational> terms)
        : kind_(kind), views_(std::move(views)), terms_(std::move(terms)) {}

    [[nodiscard]] SequenceKind kind() const { return kind_; }
    [[nodiscard]] const DivisorViews& source_views() const { return views_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// 1-based; throws IndexOutOfRange outside 1..size().
    [[nodiscard]] const Rational& at(std::size_t r) const;
    [[nodiscard]] const Rational& operator[](std::size_t r) const { return terms_[r - 1]; }
    [[nodiscard]] const std::vector<Rational>& terms() const { return terms_; }

private:
    SequenceKind kind_;
    DivisorViews views_;
    std::vector<Rational> terms_;
};

/// First `count` terms of s. Throws IndexOutOfRange if count == 0.
[[nodiscard]] RecurrentSequence s_sequence(const DivisorViews& views, std::size_t count);

/// First `count` terms of t. Throws IndexOutOfRange if count == 0.
[[nodiscard]] RecurrentSequence t_sequence(const DivisorViews& views, std::size_t count);

/// Quotient coefficients from the t-sequence:
///   d_{n-m-k} = sum_{j=0}^{k} t_{k+1-j} a_{n-j},   k = 0..n-m.
/// Only a_m..a_n are read.
/// Throws ZeroDivisor for g == 0 and DegreeTooSmall when deg f < deg g.
[[nodiscard]] Polynomial quotient_closed(const Polynomial& f, const Polynomial& g);

/// Same as above with a precomputed t-sequence of at least n-m+1 terms.
[[nodiscard]] Polynomial quotient_closed(const Polynomial& f, const RecurrentSequence& t);

/// Remainder from a known quotient q = sum d_j x^j:
///   r_k = a_k + sum_{i+j=k, i<m} c_i d_j,   k = 0..m-1.
/// The result is only meaningful when q is the true quotient.
[[nodiscard]] Polynomial remainder_closed(const Polynomial& f, const Polynomial& g,
                                          const Polynomial& q);

/// Quotient and remainder by the closed forms. Short-circuits deg f < deg g
/// to (0, f) and a constant divisor to (f / g_0, 0).
[[nodiscard]] DivisionResult divide_closed(const Polynomial& f, const Polynomial& g);

} // namespace polydiv
