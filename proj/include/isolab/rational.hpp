#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace isolab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Always "p/q" with q > 0, including integers ("3/1").
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Non-negative count ratio used inside enumeration loops. den > 0.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Ratio& a, const Ratio& b)
    {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
    {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    Rational value() const { return Rational(num, den); }
};

} // namespace isolab
