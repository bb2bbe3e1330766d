#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "dunkl/errors.hpp"

namespace dunkl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "a" or "a/b" with an optional leading sign on a.
inline Rational parse_rational(std::string_view s) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t i = start;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return i;
    };
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t num_end = digits(pos);
    if (num_end == pos) throw ParseError("invalid rational: '" + std::string(s) + "'");
    BigInt num(std::string(s.substr(0, num_end)));
    BigInt den = 1;
    if (num_end < s.size()) {
        if (s[num_end] != '/') throw ParseError("invalid rational: '" + std::string(s) + "'");
        std::size_t den_end = digits(num_end + 1);
        if (den_end != s.size() || den_end == num_end + 1)
            throw ParseError("invalid rational: '" + std::string(s) + "'");
        den = BigInt(std::string(s.substr(num_end + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    }
    return Rational(num, den);
}

}  // namespace dunkl
