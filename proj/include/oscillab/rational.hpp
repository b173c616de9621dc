#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace oscillab {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
// All arithmetic in this library is exact; there is no floating point on
// any authoritative path.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Rational(num, den);
}

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// floor(r) as an Integer
inline Integer rat_floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer rat_ceil(const Rational& r) { return -rat_floor(-r); }

// Serialized form is always "num/den", e.g. "0/1", "-3/5".
inline std::string rat_to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw std::domain_error("rational: nonpositive denominator in \"" + s + "\"");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("rational: cannot parse \"" + s + "\"");
    }
}

// Non-authoritative decimal rendering for --decimal report columns.
inline std::string rat_to_decimal(const Rational& r, int digits = 6) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer scaled = rat_floor(Rational(rat_num(r) * scale, rat_den(r)) + Rational(1, 2));
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    const Integer whole = scaled / scale;
    const Integer rem = scaled % scale;
    std::string frac = rem.str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + whole.str() + "." + frac;
}

} // namespace oscillab
