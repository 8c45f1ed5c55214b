#include "polydiv/app.hpp"

#include <cstdlib>
#include <future>
#include <ostream>

#include "CLI11.hpp"
#include "polydiv/closedform.hpp"
#include "polydiv/detengine.hpp"
#include "polydiv/report.hpp"
#include "polydiv/text.hpp"

namespace polydiv::cli {

namespace {

struct Options {
    std::string dividend;
    std::string divisor;
    std::string method = "longdiv";
    std::string format = "text";
    std::string variant = "pure-direct";
    std::string kind = "t";
    std::size_t k = 1;
    std::size_t count = 1;
    std::size_t max_order = MatrixLimits{}.max_order;
};

InputLimits limits_from_env() {
    InputLimits limits;
    if (const char* env = std::getenv("POLYDIV_MAX_DEGREE"); env && *env) {
        const std::string value(env);
        if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9) {
            throw CLI::ValidationError("POLYDIV_MAX_DEGREE", "expected a non-negative integer, got '" + value + "'");
        }
        limits.max_degree = std::stoul(value);
    }
    return limits;
}

DivisionResult checked_divide(const DivideFn& fn, const Polynomial& f, const Polynomial& g,
                              Method method, const MatrixLimits& limits) {
    return fn ? fn(f, g, method, limits) : divide(f, g, method, limits);
}

int cmd_divide(const Options& opt, const InputLimits& in_limits, const Hooks& hooks,
               std::ostream& out, std::ostream& err) {
    const Polynomial f = parse_polynomial(opt.dividend, in_limits);
    const Polynomial g = parse_polynomial(opt.divisor, in_limits);
    const Method method = *parse_method(opt.method);
    const MatrixLimits limits{opt.max_order};

    DivisionReport report{f, g, method, checked_divide(hooks.divide, f, g, method, limits), {}};
    if (!satisfies_division_identity(f, g, report.result)) {
        err << "error: " << opt.method << " result fails f = g*q + r\n";
        return exit_mismatch;
    }
    out << (opt.format == "json" ? render_json(report) + "\n" : render_text(report));
    return exit_ok;
}

int cmd_verify(const Options& opt, const InputLimits& in_limits, const Hooks& hooks,
               std::ostream& out, std::ostream& err) {
    const Polynomial f = parse_polynomial(opt.dividend, in_limits);
    const Polynomial g = parse_polynomial(opt.divisor, in_limits);
    const MatrixLimits limits{opt.max_order};

    std::vector<std::future<DivisionResult>> pending;
    for (Method m : all_methods) {
        pending.push_back(std::async(std::launch::async, [&, m] {
            return checked_divide(hooks.divide, f, g, m, limits);
        }));
    }
    std::vector<DivisionResult> results;
    for (auto& p : pending) {
        results.push_back(p.get());
    }

    const DivisionResult& reference = results.front();
    const bool reference_ok = satisfies_division_identity(f, g, reference);
    std::vector<MethodAgreement> agreement;
    std::string first_diff;
    for (std::size_t i = 0; i < all_methods.size(); ++i) {
        const bool agrees = reference_ok && results[i] == reference;
        agreement.push_back({all_methods[i], agrees});
        if (!agrees && first_diff.empty()) {
            first_diff = std::string(method_name(all_methods[i])) + " vs longdiv: " +
                         (reference_ok ? describe_difference(reference, results[i])
                                       : std::string("longdiv fails f = g*q + r"));
        }
    }

    DivisionReport report{f, g, Method::longdiv, reference, agreement};
    out << (opt.format == "json" ? render_json(report) + "\n" : render_text(report));
    if (!first_diff.empty()) {
        err << "mismatch: " << first_diff << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

int cmd_delta(const Options& opt, const InputLimits& in_limits, std::ostream& out) {
    const Polynomial g = parse_polynomial(opt.divisor, in_limits);
    const DeltaPureSpec spec{divisor_views(g), opt.k};
    Rational value;
    if (opt.variant == "pure-direct") {
        value = delta_pure_direct(spec, DeltaSign::standard, MatrixLimits{opt.max_order});
    } else if (opt.variant == "pure-closed") {
        value = delta_pure_closed(spec, DeltaSign::standard);
    } else {
        value = delta_pure_closed(spec, DeltaSign::flipped);
    }
    out << value << '\n';
    return exit_ok;
}

int cmd_sequence(const Options& opt, const InputLimits& in_limits, std::ostream& out) {
    const Polynomial g = parse_polynomial(opt.divisor, in_limits);
    const auto views = divisor_views(g);
    const auto seq = opt.kind == "s" ? s_sequence(views, opt.count) : t_sequence(views, opt.count);
    for (std::size_t r = 1; r <= seq.size(); ++r) {
        out << (r > 1 ? ", " : "") << seq[r];
    }
    out << '\n';
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
    Options opt;
    CLI::App app{"Exact univariate polynomial division by long division, recurrent-sequence "
                 "closed forms and Hessenberg-Toeplitz determinant formulas."};
    app.name("polydiv");
    app.require_subcommand(1);
    app.add_option("--max-order", opt.max_order, "Cap on the order of explicitly built matrices")
        ->check(CLI::PositiveNumber);

    const std::vector<std::string> methods{"longdiv", "closed", "det-formula", "det-ratio"};

    auto* divide_cmd = app.add_subcommand("divide", "Divide with one method");
    divide_cmd->add_option("--dividend", opt.dividend, "Dividend f")->required();
    divide_cmd->add_option("--divisor", opt.divisor, "Divisor g")->required();
    divide_cmd->add_option("--method", opt.method)->check(CLI::IsMember(methods));
    divide_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run all four methods and compare exactly");
    verify_cmd->add_option("--dividend", opt.dividend, "Dividend f")->required();
    verify_cmd->add_option("--divisor", opt.divisor, "Divisor g")->required();
    verify_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* delta_cmd = app.add_subcommand("delta", "Pure Hessenberg-Toeplitz determinant of order k");
    delta_cmd->add_option("--divisor", opt.divisor, "Divisor g")->required();
    delta_cmd->add_option("-k", opt.k, "Order")->required()->check(CLI::PositiveNumber);
    delta_cmd->add_option("--variant", opt.variant)
        ->check(CLI::IsMember({"pure-direct", "pure-closed", "cor-flipped"}));

    auto* sequence_cmd = app.add_subcommand("sequence", "Terms of the s or t recurrent sequence");
    sequence_cmd->add_option("--divisor", opt.divisor, "Divisor g")->required();
    sequence_cmd->add_option("--kind", opt.kind)->check(CLI::IsMember({"s", "t"}));
    sequence_cmd->add_option("-n", opt.count, "Number of terms")->required()->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        const InputLimits in_limits = limits_from_env();
        if (*divide_cmd) {
            return cmd_divide(opt, in_limits, hooks, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(opt, in_limits, hooks, out, err);
        }
        if (*delta_cmd) {
            return cmd_delta(opt, in_limits, out);
        }
        return cmd_sequence(opt, in_limits, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace polydiv::cli
