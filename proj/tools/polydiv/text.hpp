#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polydiv/errors.hpp"
#include "polydiv/polynomial.hpp"

namespace polydiv::cli {

struct InputLimits {
    std::size_t max_degree = 512;
    std::size_t max_coeff_bits = 4096;
};

/// Malformed polynomial text. `column` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t column, const std::string& message);
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Accepts either human syntax, e.g. "3x^4 - 2x + 1/2" (terms with equal
/// exponents are summed, "*" between coefficient and x is optional), or an
/// ascending coefficient list "[1/2, -2, 0, 0, 3]".
///
/// Throws ParseError on bad syntax, a negative exponent or a zero denominator,
/// and LimitExceeded when the degree or a coefficient exceeds `limits`.
[[nodiscard]] Polynomial parse_polynomial(std::string_view text, const InputLimits& limits = {});

/// Descending human form without spaces, e.g. "1/2x^2-3x+1/2"; "0" for zero.
/// parse_polynomial(render_polynomial(p)) == p.
[[nodiscard]] std::string render_polynomial(const Polynomial& p);

/// Ascending exact coefficient strings ("num" or "num/den").
[[nodiscard]] std::vector<std::string> render_coefficients(const Polynomial& p);

/// Ascending coefficient-list form "[c0, c1, ...]"; "[]" for zero.
[[nodiscard]] std::string render_coefficient_list(const Polynomial& p);

} // namespace polydiv::cli
