#include "polydiv/interpolate.hpp"

#include "polydiv/errors.hpp"

namespace polydiv {

std::vector<Rational> interpolation_nodes(std::size_t count) {
    std::vector<Rational> nodes;
    nodes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // 0, 1, -1, 2, -2, ...
        const long mag = static_cast<long>((i + 1) / 2);
        nodes.emplace_back(i % 2 == 1 ? mag : -mag);
    }
    return nodes;
}

Polynomial interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
    if (nodes.empty() || nodes.size() != values.size()) {
        throw IndexOutOfRange("interpolation needs equally many nodes and values");
    }
    const std::size_t n = nodes.size();

    // Divided differences in place: coef[i] = f[x_0, ..., x_i].
    std::vector<Rational> coef(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational gap = nodes[i] - nodes[i - level];
            if (gap.is_zero()) {
                throw ZeroDivisor("repeated interpolation node");
            }
            coef[i] = (coef[i] - coef[i - 1]) / gap;
        }
    }

    // Horner on the Newton form.
    Polynomial result{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        result = add(mul(result, Polynomial{-nodes[i], Rational(1)}), Polynomial{coef[i]});
    }
    return result;
}

} // namespace polydiv
