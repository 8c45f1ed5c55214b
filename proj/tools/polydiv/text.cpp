#include "polydiv/text.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace polydiv::cli {

ParseError::ParseError(std::size_t column, const std::string& message)
    : Error("column " + std::to_string(column) + ": " + message), column_(column) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const InputLimits& limits) : text_(text), limits_(limits) {}

    Polynomial parse() {
        skip_space();
        if (done()) {
            fail("empty polynomial");
        }
        Polynomial p = peek() == '[' ? parse_list() : parse_terms();
        if (!p.is_zero() && *p.degree() > limits_.max_degree) {
            throw LimitExceeded("degree " + std::to_string(*p.degree()) + " exceeds cap " +
                                std::to_string(limits_.max_degree));
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(pos + 1, message);
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (at_digit()) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    // unsigned rational literal: digits [ '/' digits ]
    Rational unsigned_rational() {
        const std::size_t start = pos_;
        const auto num = digits();
        if (num.empty()) {
            fail("expected a number");
        }
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            const auto den_text = digits();
            if (den_text.empty()) {
                fail("expected a denominator after '/'");
            }
            den = Integer(std::string(den_text), 10);
            if (sgn(den) == 0) {
                fail_at(den_pos, "zero denominator");
            }
        }
        Rational value(Integer(std::string(num), 10), den);
        if (value.bit_length() > limits_.max_coeff_bits) {
            throw LimitExceeded("coefficient at column " + std::to_string(start + 1) +
                                " exceeds " + std::to_string(limits_.max_coeff_bits) + " bits");
        }
        return value;
    }

    Polynomial parse_list() {
        ++pos_; // '['
        std::vector<Rational> coeffs;
        skip_space();
        if (peek() == ']') {
            ++pos_;
            expect_end();
            return {};
        }
        while (true) {
            skip_space();
            bool negative = false;
            if (peek() == '-' || peek() == '+') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            }
            Rational c = unsigned_rational();
            coeffs.push_back(negative ? -c : c);
            if (coeffs.size() > limits_.max_degree + 1) {
                throw LimitExceeded("coefficient list longer than degree cap allows");
            }
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            fail(done() ? "unterminated coefficient list" : "expected ',' or ']'");
        }
        expect_end();
        return Polynomial(std::move(coeffs));
    }

    Polynomial parse_terms() {
        std::map<std::size_t, Rational> terms;
        bool first = true;
        while (true) {
            skip_space();
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            const std::size_t term_start = pos_;

            Rational coeff = 1;
            const bool has_coeff = at_digit();
            if (has_coeff) {
                coeff = unsigned_rational();
                skip_space();
                if (peek() == '*') {
                    ++pos_;
                    skip_space();
                    if (peek() != 'x') {
                        fail("expected 'x' after '*'");
                    }
                }
            }

            std::size_t exponent = 0;
            if (peek() == 'x') {
                ++pos_;
                exponent = 1;
                skip_space();
                if (peek() == '^') {
                    ++pos_;
                    skip_space();
                    if (peek() == '-') {
                        fail("negative exponent");
                    }
                    const std::size_t exp_pos = pos_;
                    const auto exp_text = digits();
                    if (exp_text.empty()) {
                        fail("expected an exponent after '^'");
                    }
                    if (exp_text.size() > 9 ||
                        std::stoul(std::string(exp_text)) > limits_.max_degree) {
                        throw LimitExceeded("exponent at column " + std::to_string(exp_pos + 1) +
                                            " exceeds degree cap " +
                                            std::to_string(limits_.max_degree));
                    }
                    exponent = std::stoul(std::string(exp_text));
                }
            } else if (!has_coeff) {
                fail_at(term_start, done() ? "unexpected end of input" : "malformed term");
            }

            terms[exponent] += negative ? -coeff : coeff;
            first = false;
            skip_space();
            if (done()) {
                break;
            }
        }
        std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
        for (auto& [power, c] : terms) {
            coeffs[power] = std::move(c);
        }
        return Polynomial(std::move(coeffs));
    }

    void expect_end() {
        skip_space();
        if (!done()) {
            fail("trailing characters");
        }
    }

    std::string_view text_;
    const InputLimits& limits_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const InputLimits& limits) {
    return Parser(text, limits).parse();
}

std::string render_polynomial(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) {
            continue;
        }
        if (c.sign() < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        const Rational mag = c.abs();
        if (i == 0 || !mag.is_one()) {
            os << mag;
        }
        if (i >= 1) {
            os << 'x';
        }
        if (i >= 2) {
            os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> render_coefficients(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        out.push_back(c.to_string());
    }
    return out;
}

std::string render_coefficient_list(const Polynomial& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? ", " : "") + p.coeff(i).to_string();
    }
    return out + "]";
}

} // namespace polydiv::cli
