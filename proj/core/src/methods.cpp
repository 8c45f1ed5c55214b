#include "polydiv/methods.hpp"

#include "polydiv/closedform.hpp"

namespace polydiv {

std::string_view method_name(Method method) {
    switch (method) {
    case Method::longdiv: return "longdiv";
    case Method::closed: return "closed";
    case Method::det_formula: return "det-formula";
    case Method::det_ratio: return "det-ratio";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : all_methods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

DivisionResult divide(const Polynomial& f, const Polynomial& g, Method method,
                      const MatrixLimits& limits) {
    switch (method) {
    case Method::longdiv: return long_divide(f, g);
    case Method::closed: return divide_closed(f, g);
    case Method::det_formula: return divide_det_formula(f, g);
    case Method::det_ratio: return divide_det_ratio(f, g, limits);
    }
    return long_divide(f, g);
}

} // namespace polydiv
