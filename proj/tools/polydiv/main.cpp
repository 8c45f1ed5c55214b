#include <iostream>
#include <string>
#include <vector>

#include "polydiv/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    polydiv::cli::Hooks hooks;
#ifdef POLYDIV_CORRUPT_METHOD
    const auto corrupted = polydiv::parse_method(POLYDIV_CORRUPT_METHOD);
    hooks.divide = [corrupted](const polydiv::Polynomial& f, const polydiv::Polynomial& g,
                               polydiv::Method method, const polydiv::MatrixLimits& limits) {
        auto result = polydiv::divide(f, g, method, limits);
        if (method == corrupted) {
            result.quotient = result.quotient + polydiv::Polynomial{1};
        }
        return result;
    };
#endif
    return polydiv::cli::run(args, std::cout, std::cerr, hooks);
}
