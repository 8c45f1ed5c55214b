#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydiv/methods.hpp"

namespace polydiv::cli {

struct MethodAgreement {
    Method method;
    bool agrees;
};

/// What `divide` and `verify` print. `agreement` is present for verify only.
struct DivisionReport {
    Polynomial dividend;
    Polynomial divisor;
    Method method = Method::longdiv;
    DivisionResult result;
    std::optional<std::vector<MethodAgreement>> agreement;
};

/// Keys: dividend, divisor, method, quotient, remainder and, for verify,
/// agreement. Coefficient arrays are ascending exact strings.
[[nodiscard]] std::string render_json(const DivisionReport& report);

[[nodiscard]] std::string render_text(const DivisionReport& report);

/// First coefficient where `actual` departs from `expected`, as a one-line
/// human description; empty when the results are identical.
[[nodiscard]] std::string describe_difference(const DivisionResult& expected,
                                              const DivisionResult& actual);

} // namespace polydiv::cli
