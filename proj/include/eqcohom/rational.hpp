#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "eqcohom/errors.hpp"

namespace eqcohom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Build p/q with sign normalization (q > 0 afterwards).  The boost
// constructor rejects negative denominators outright, so flip here.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

namespace detail {

inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') start = 1;
    if (start == text.size()) throw ParseError("sign without digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("bad integer literal: '" + std::string(text) + "'");
        }
    }
    return Integer(std::string(text));
}

}  // namespace detail

// Accepts "p", "p/q", optional leading sign on either part.  Whitespace is
// not trimmed; callers strip it when tokenizing.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(text));
    }
    Integer num = detail::parse_integer(text.substr(0, slash));
    Integer den = detail::parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace eqcohom
