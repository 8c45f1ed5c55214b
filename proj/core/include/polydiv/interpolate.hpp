#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polydiv/polynomial.hpp"

namespace polydiv {

/// Fixed node sequence 0, 1, -1, 2, -2, ... truncated to `count`.
[[nodiscard]] std::vector<Rational> interpolation_nodes(std::size_t count);

/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
/// Newton divided differences over the rationals. Throws IndexOutOfRange on a
/// size mismatch or empty input and ZeroDivisor on repeated nodes.
[[nodiscard]] Polynomial interpolate(std::span<const Rational> nodes,
                                     std::span<const Rational> values);

} // namespace polydiv
