#ifndef PCW_RATIONAL_HPP
#define PCW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "pcw/errors.hpp"

namespace pcw {

// All cone arithmetic is exact: arbitrary-precision integers and rationals,
// no floating point anywhere near a membership decision.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

// ceil(q) for an exact rational.
inline Integer ceil_rational(const Rational& q) {
    Integer n = numer(q), d = denom(q); // d > 0 canonical
    Integer quot = n / d;
    if (n % d != 0 && n > 0) ++quot;
    return quot;
}

// Parses "p", "-p" or "p/q".  Whitespace is not tolerated; q must be nonzero.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer p(s.substr(0, slash));
        Integer q(s.substr(slash + 1));
        if (q == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rational(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::runtime_error&) {
        throw DomainError("bad rational literal '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& q) {
    if (denom(q) == 1) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

} // namespace pcw

#endif
