#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "polydiv/rational.hpp"

namespace polydiv {

/// Dense square matrix of exact rationals, row-major, 0-based addressing.
class ExactMatrix {
public:
    /// Zero matrix. Throws IndexOutOfRange for order 0.
    explicit ExactMatrix(std::size_t order);
    /// Throws IndexOutOfRange unless `rows` is a non-empty square grid.
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t order);
    /// Ones on the anti-diagonal.
    static ExactMatrix anti_identity(std::size_t order);

    [[nodiscard]] std::size_t order() const { return order_; }

    [[nodiscard]] Rational& operator()(std::size_t row, std::size_t col) {
        return entries_[row * order_ + col];
    }
    [[nodiscard]] const Rational& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * order_ + col];
    }

    /// Submatrix with one row and one column removed.
    [[nodiscard]] ExactMatrix minor(std::size_t row, std::size_t col) const;

    friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t order_;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

/// Laplace expansion along the first row. Exponential; meant for small orders.
[[nodiscard]] Rational det_cofactor(const ExactMatrix& m);

/// Fraction-free (Bareiss) elimination after clearing row denominators.
[[nodiscard]] Rational det_bareiss(const ExactMatrix& m);

/// Reference determinant: cofactor expansion up to order 4, Bareiss above.
[[nodiscard]] Rational det_oracle(const ExactMatrix& m);

} // namespace polydiv
