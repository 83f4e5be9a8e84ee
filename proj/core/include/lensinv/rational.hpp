#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lensinv {

/// Arbitrary-precision integer. All arithmetic in this library is exact.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;

/// num/den as a canonical Rational. Throws std::domain_error on den == 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "a/b", or just "a" when the value is an integer.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Strict base-10 parse (optional leading '-'). Throws std::domain_error
/// on anything else; never overflows.
inline Integer parse_integer(const std::string& text) {
    if (text.empty()) throw std::domain_error("parse_integer: empty string");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::domain_error("parse_integer: no digits in '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::domain_error("parse_integer: invalid integer '" + text + "'");
    return Integer(text, 10);
}

/// Parses "a" or "a/b" into a canonical Rational.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)),
                         parse_integer(text.substr(slash + 1)));
}

inline bool fits_long(const Integer& z) { return z.fits_slong_p(); }

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::domain_error("integer too large: " + z.get_str());
    return z.get_si();
}

}  // namespace lensinv
