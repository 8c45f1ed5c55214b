#include "polydiv/matrix.hpp"

#include <ostream>
#include <utility>

#include "polydiv/errors.hpp"

namespace polydiv {

ExactMatrix::ExactMatrix(std::size_t order) : order_(order), entries_(order * order) {
    if (order == 0) {
        throw IndexOutOfRange("matrix order must be positive");
    }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : order_(rows.size()) {
    if (order_ == 0) {
        throw IndexOutOfRange("matrix order must be positive");
    }
    entries_.reserve(order_ * order_);
    for (const auto& row : rows) {
        if (row.size() != order_) {
            throw IndexOutOfRange("matrix rows must form a square grid");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t order) {
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        m(i, i) = 1;
    }
    return m;
}

ExactMatrix ExactMatrix::anti_identity(std::size_t order) {
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        m(i, order - 1 - i) = 1;
    }
    return m;
}

ExactMatrix ExactMatrix::minor(std::size_t row, std::size_t col) const {
    if (order_ < 2 || row >= order_ || col >= order_) {
        throw IndexOutOfRange("minor of a matrix of order < 2 or bad index");
    }
    ExactMatrix out(order_ - 1);
    for (std::size_t i = 0, oi = 0; i < order_; ++i) {
        if (i == row) {
            continue;
        }
        for (std::size_t j = 0, oj = 0; j < order_; ++j) {
            if (j == col) {
                continue;
            }
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    if (lhs.order_ != rhs.order_) {
        throw IndexOutOfRange("matrix product of different orders");
    }
    const std::size_t n = lhs.order_;
    ExactMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.order(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.order(); ++j) {
            os << (j ? ", " : "") << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

Rational det_cofactor(const ExactMatrix& m) {
    const std::size_t n = m.order();
    if (n == 1) {
        return m(0, 0);
    }
    if (n == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) {
            continue;
        }
        const Rational term = m(0, j) * det_cofactor(m.minor(0, j));
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

Rational det_bareiss(const ExactMatrix& m) {
    const std::size_t n = m.order();

    // Scale each row to integers; det(M) = det(A) / prod(row scales).
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Integer den = m(i, j).denominator();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
        }
        scale *= row_lcm;
    }

    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(at(k, k)) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && sgn(at(pivot, k)) == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return Rational(0);
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(at(k, j), at(pivot, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Integer det = at(n - 1, n - 1);
    if (sign < 0) {
        det = -det;
    }
    return Rational(det, scale);
}

Rational det_oracle(const ExactMatrix& m) {
    return m.order() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

} // namespace polydiv
