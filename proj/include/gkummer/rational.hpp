#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gkummer {

// Exact arithmetic scalars. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form required here.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_zero(const Int& n) { return n.is_zero(); }

/// Parses "n" or "n/d" with optional sign; throws on malformed input or d = 0.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

/// Canonical form: "n" for integers, "n/d" otherwise.
inline std::string format_rat(const Rat& r) {
    Int d = rat_den(r);
    std::string out = rat_num(r).str();
    if (d != 1) out += "/" + d.str();
    return out;
}

/// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

}  // namespace gkummer
