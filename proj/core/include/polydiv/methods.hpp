#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "polydiv/detengine.hpp"
#include "polydiv/division.hpp"

namespace polydiv {

enum class Method {
    longdiv,
    closed,
    det_formula,
    det_ratio,
};

inline constexpr std::array<Method, 4> all_methods{
    Method::longdiv, Method::closed, Method::det_formula, Method::det_ratio};

/// "longdiv", "closed", "det-formula", "det-ratio".
[[nodiscard]] std::string_view method_name(Method method);
[[nodiscard]] std::optional<Method> parse_method(std::string_view name);

[[nodiscard]] DivisionResult divide(const Polynomial& f, const Polynomial& g, Method method,
                                    const MatrixLimits& limits = {});

} // namespace polydiv
