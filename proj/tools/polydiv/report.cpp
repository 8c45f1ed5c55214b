#include "polydiv/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "polydiv/text.hpp"

namespace polydiv::cli {

namespace {

std::string first_difference(const char* part, const Polynomial& expected,
                             const Polynomial& actual) {
    const std::size_t len = std::max(expected.size(), actual.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (expected.coeff(i) != actual.coeff(i)) {
            std::ostringstream os;
            os << part << " coefficient of x^" << i << ": expected " << expected.coeff(i)
               << ", got " << actual.coeff(i);
            return os.str();
        }
    }
    return {};
}

} // namespace

std::string render_json(const DivisionReport& report) {
    nlohmann::ordered_json j;
    j["dividend"] = render_polynomial(report.dividend);
    j["divisor"] = render_polynomial(report.divisor);
    j["method"] = std::string(method_name(report.method));
    j["quotient"] = render_coefficients(report.result.quotient);
    j["remainder"] = render_coefficients(report.result.remainder);
    if (report.agreement) {
        nlohmann::ordered_json flags = nlohmann::ordered_json::object();
        for (const auto& [method, agrees] : *report.agreement) {
            flags[std::string(method_name(method))] = agrees;
        }
        j["agreement"] = std::move(flags);
    }
    return j.dump();
}

std::string render_text(const DivisionReport& report) {
    std::ostringstream os;
    os << "quotient: " << render_polynomial(report.result.quotient) << '\n'
       << "remainder: " << render_polynomial(report.result.remainder) << '\n';
    if (report.agreement) {
        for (const auto& [method, agrees] : *report.agreement) {
            os << method_name(method) << ": " << (agrees ? "agree" : "MISMATCH") << '\n';
        }
    }
    return os.str();
}

std::string describe_difference(const DivisionResult& expected, const DivisionResult& actual) {
    auto diff = first_difference("quotient", expected.quotient, actual.quotient);
    if (diff.empty()) {
        diff = first_difference("remainder", expected.remainder, actual.remainder);
    }
    return diff;
}

} // namespace polydiv::cli
