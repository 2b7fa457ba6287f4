#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

// Arbitrary-precision exact arithmetic. cpp_rational keeps the canonical
// form we rely on everywhere: denominator > 0, gcd(|num|, den) = 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Parses an integer or a "p/q" literal with q > 0.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den <= 0) {
            throw InputError("rational literal '" + text + "': denominator must be positive");
        }
        return Rational(num, den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("cannot parse rational literal '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

// binom(n, k) as an exact integer; 0 when k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

inline std::size_t binomial_size(long n, long k) {
    return binomial(n, k).convert_to<std::size_t>();
}

} // namespace waring

#endif
