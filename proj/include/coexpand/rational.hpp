#ifndef COEXPAND_RATIONAL_HPP
#define COEXPAND_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "errors.hpp"

namespace coexpand {

// All solver arithmetic is exact. Integer is arbitrary precision; Rational is
// kept canonical by the backend (reduced, denominator > 0).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Integer floor_int(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline Integer ceil_int(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer c = n / d;
    if (n > 0 && c * d != n) ++c;
    return c;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline Integer int_abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

// Distance to the nearest integer; zero iff q is integral.
inline Rational frac_distance(const Rational& q) {
    Rational lo = Rational(floor_int(q));
    Rational hi = Rational(ceil_int(q));
    Rational a = q - lo, b = hi - q;
    return a < b ? a : b;
}

inline Rational l1_norm(const RatVec& v) {
    Rational s = 0;
    for (const auto& x : v) s += rat_abs(x);
    return s;
}

inline Integer l1_norm(const IntVec& v) {
    Integer s = 0;
    for (const auto& x : v) s += int_abs(x);
    return s;
}

inline Integer linf_norm(const IntVec& v) {
    Integer s = 0;
    for (const auto& x : v)
        if (int_abs(x) > s) s = int_abs(x);
    return s;
}

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
inline int sign_of(const Integer& n) { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

// Canonical serialized form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw FormatError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        if (d == 0) throw FormatError("zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw FormatError("bad rational literal '" + s + "'");
    }
}

// Scale a nonzero rational vector to a primitive integer vector, preserving
// direction: multiply by the lcm of denominators, divide by the gcd.
inline IntVec to_primitive_integer(const RatVec& v) {
    Integer l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, den(q));
    IntVec w(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (l / den(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rational(v[i]);
    return w;
}

} // namespace coexpand

#endif // COEXPAND_RATIONAL_HPP
