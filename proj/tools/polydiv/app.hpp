#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polydiv/methods.hpp"

namespace polydiv::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 1,    ///< malformed polynomial or command line
    exit_domain = 2,   ///< zero divisor, size caps, other domain errors
    exit_mismatch = 3, ///< verify found disagreeing methods
};

using DivideFn = std::function<DivisionResult(const Polynomial&, const Polynomial&, Method,
                                              const MatrixLimits&)>;

/// Injection point for the division backend; empty means polydiv::divide.
struct Hooks {
    DivideFn divide;
};

/// Runs the polydiv command line. `args[0]` is the program name. Normal
/// output goes to `out`, diagnostics to `err`; returns the process exit code.
/// Reads POLYDIV_MAX_DEGREE from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

} // namespace polydiv::cli
