#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wrightcheck {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) return Rational(-Integer(num), -Integer(den));
    return Rational(Integer(num), Integer(den));
}

/// Renders as "n" for integers and "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    const Integer& den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

/// Accepts "[+-]digits" or "[+-]digits/digits".
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
        std::size_t i = 0;
        bool negative = false;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
            negative = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        Integer v(std::string(s.substr(i)));
        return negative ? Integer(-v) : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    Integer den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), true), den);
}

inline Rational power(Rational base, unsigned exponent) {
    Rational result = 1;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

/// Largest integer not exceeding r.
inline Integer floor(const Rational& r) {
    const Integer& num = boost::multiprecision::numerator(r);
    const Integer& den = boost::multiprecision::denominator(r);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace wrightcheck
