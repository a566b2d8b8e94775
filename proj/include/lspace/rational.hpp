/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integer and rational scalars.
 *
 * Every quantity in this library (d-invariants, Casson-Walker values,
 * Dedekind sums, grading shifts) is an exact rational; there is no
 * floating point anywhere. Rationals are always stored reduced with a
 * positive denominator.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lspace {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation's stated precondition is violated. The message
/// names the failed check so callers (and the CLI) can report it verbatim.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw precondition_error(what);
}

/// num/den with any signs; den must be nonzero.
inline Rational make_rational(Int num, Int den) {
    require(den != 0, "denominator must be nonzero");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// floor(r) as an exact integer.
inline Int floor_rat(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// r1 == r2 modulo 2 (difference is an even integer).
inline bool congruent_mod2(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return is_integer(d) && numerator(d) % 2 == 0;
}

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

inline Int gcd_int(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Reduced "a/b" (plain "a" when integral); never a decimal.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline std::string to_string(const Int& n) { return n.str(); }

/// Parses "a" or "a/b" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw precondition_error("malformed rational: expected \"a\" or \"a/b\"");
    }
}

}  // namespace lspace
