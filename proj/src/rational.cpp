#include "isolab/rational.hpp"

#include "isolab/error.hpp"

namespace isolab {

std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    BigInt p, q = 1;
    try {
        if (slash == std::string::npos) {
            p = BigInt(text);
        } else {
            p = BigInt(text.substr(0, slash));
            q = BigInt(text.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw Error(Errc::BadInput, "not a rational: '" + text + "'");
    }
    if (q == 0) throw Error(Errc::BadInput, "zero denominator in '" + text + "'");
    return Rational(p, q);
}

} // namespace isolab
