#pragma once

// Independent reference computations used only by tests. None of these
// share code with the routes they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "polydiv/division.hpp"
#include "polydiv/matrix.hpp"

namespace polydiv::fixtures {

/// Leibniz permutation sum. O(n * n!), fine up to order 7.
inline Rational det_leibniz(const ExactMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational total;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Rational term = 1;
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            term *= m(i, perm[i]);
        }
        total += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Rule of Sarrus / ad - bc, written out by hand.
inline Rational det_by_hand(const ExactMatrix& m) {
    if (m.order() == 1) {
        return m(0, 0);
    }
    if (m.order() == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) +
           m(0, 2) * m(1, 0) * m(2, 1) - m(0, 2) * m(1, 1) * m(2, 0) -
           m(0, 0) * m(1, 2) * m(2, 1) - m(0, 1) * m(1, 0) * m(2, 2);
}

/// t_1..t_count read off the quotient of x^(m+count-1) by g: with f a single
/// monomial every quotient coefficient is one t term.
inline std::vector<Rational> t_terms_by_division(const Polynomial& g, std::size_t count) {
    const std::size_t m = *g.degree();
    const auto q = long_divide(Polynomial::monomial(1, m + count - 1), g).quotient;
    std::vector<Rational> t;
    for (std::size_t r = 1; r <= count; ++r) {
        t.push_back(q.coeff(count - r));
    }
    return t;
}

} // namespace polydiv::fixtures
