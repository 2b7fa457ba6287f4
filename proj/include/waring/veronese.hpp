#ifndef WARING_VERONESE_HPP
#define WARING_VERONESE_HPP

#include <cstddef>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

// Exponent vector of a degree-d monomial in n+1 variables.
using ExponentVector = std::vector<long>;

// All degree-d monomials in x_0,...,x_n, graded-lex with x_0 > x_1 > ... > x_n.
// Fixed project-wide so every coordinate vector is bit-reproducible.
inline std::vector<ExponentVector> monomials(long n, long d) {
    std::vector<ExponentVector> out;
    out.reserve(binomial_size(n + d, d));
    ExponentVector current(static_cast<std::size_t>(n) + 1, 0);
    // Lexicographic descent: place e_0 from d downward, recurse on the rest.
    auto recurse = [&](auto&& self, std::size_t pos, long remaining) -> void {
        if (pos + 1 == current.size()) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (long e = remaining; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    recurse(recurse, 0, d);
    return out;
}

// nu_d(m): the vector of all degree-d monomial evaluations of m, in
// monomials(n, d) order. Plain monomial coordinates, no multinomial weights.
inline std::vector<Rational> veronese_embed(const std::vector<Rational>& m, long d) {
    bool all_zero = true;
    for (const auto& c : m) {
        if (c != 0) {
            all_zero = false;
            break;
        }
    }
    if (m.empty() || all_zero) {
        throw InputError("veronese_embed: zero vector");
    }
    const long n = static_cast<long>(m.size()) - 1;
    const auto exps = monomials(n, d);
    std::vector<Rational> out;
    out.reserve(exps.size());
    for (const auto& e : exps) {
        Rational value = 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (long k = 0; k < e[i]; ++k) value *= m[i];
        }
        out.push_back(value);
    }
    return out;
}

// Jacobian columns of nu_d at m: vector j is the partial derivative of the
// monomial evaluation map in direction e_j. Their span is the affine cone
// over the tangent space of the Veronese variety at [m]; by the Euler
// relation it contains nu_d(m) itself.
inline std::vector<std::vector<Rational>> tangent_basis(const std::vector<Rational>& m, long d) {
    bool all_zero = true;
    for (const auto& c : m) {
        if (c != 0) {
            all_zero = false;
            break;
        }
    }
    if (m.empty() || all_zero) {
        throw InputError("tangent_basis: zero vector");
    }
    if (d < 1) {
        throw InputError("tangent_basis: degree must be >= 1");
    }
    const long n = static_cast<long>(m.size()) - 1;
    const auto exps = monomials(n, d);
    std::vector<std::vector<Rational>> out(m.size(), std::vector<Rational>(exps.size()));
    for (std::size_t col = 0; col < exps.size(); ++col) {
        const auto& e = exps[col];
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (e[j] == 0) continue;
            Rational value = e[j];
            for (std::size_t i = 0; i < m.size(); ++i) {
                const long power = e[i] - (i == j ? 1 : 0);
                for (long k = 0; k < power; ++k) value *= m[i];
            }
            out[j][col] = value;
        }
    }
    return out;
}

} // namespace waring

#endif
