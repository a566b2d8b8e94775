/**
 * @file exact.hpp
 * @brief Sawtooth function, Dedekind sums, continued fractions, and
 *        quadratic-residue tests, all in exact arithmetic.
 *
 * The residue tests deliberately use exhaustive scans rather than Euler's
 * criterion: the moduli here are not assumed prime.
 */
#pragma once

#include "lspace/rational.hpp"

#include <set>
#include <utility>
#include <vector>

namespace lspace {

/// Sawtooth ((x)): x - floor(x) - 1/2 for non-integer x, 0 at integers.
inline Rational sawtooth(const Rational& x) {
    if (is_integer(x)) return Rational(0);
    return x - Rational(floor_rat(x)) - make_rational(1, 2);
}

/// Dedekind sum s(q,p) = sum_{k=1}^{p-1} ((k/p))((kq/p)).
///
/// Computed over a common denominator: each term is
/// (2k-p)(2r-p)/(4p^2) with r = kq mod p, which never vanishes for
/// 0 < k < p when gcd(p,q) = 1. The result lies in (1/6p)Z.
inline Rational dedekind_sum(const Int& q, const Int& p) {
    require(p >= 1, "dedekind_sum: p must be positive");
    require(gcd_int(p, q) == 1, "dedekind_sum: gcd(p,q) = 1 required");
    Int acc = 0;
    Int qm = q % p;
    if (qm < 0) qm += p;
    Int r = 0;
    for (Int k = 1; k < p; ++k) {
        r += qm;
        if (r >= p) r -= p;
        acc += (2 * k - p) * (2 * r - p);
    }
    return make_rational(acc, 4 * p * p);
}

/// Continued fraction [a1,a2,...] of p/q in the all-positive convention,
/// final term >= 2 (the canonical form; follows from plain Euclid).
inline std::vector<Int> cf_expand(Int p, Int q) {
    require(p >= 1, "cf_expand: p must be positive");
    require(q > 0 && q < p, "cf_expand: 0 < q < p required");
    require(gcd_int(p, q) == 1, "cf_expand: gcd(p,q) = 1 required");
    std::vector<Int> terms;
    while (q != 0) {
        terms.push_back(p / q);
        Int r = p % q;
        p = q;
        q = r;
    }
    return terms;
}

/// Inverse of cf_expand: [a1,...,an] -> (p,q) with p/q = a1 + 1/(a2 + ...).
inline std::pair<Int, Int> cf_evaluate(const std::vector<Int>& terms) {
    require(!terms.empty(), "cf_evaluate: nonempty term sequence required");
    for (const Int& a : terms) require(a >= 1, "cf_evaluate: terms must be >= 1");
    Int p = terms.back(), q = 1;
    for (auto it = std::next(terms.rbegin()); it != terms.rend(); ++it) {
        // a + 1/(p/q) = (a p + q)/p
        Int np = *it * p + q;
        q = p;
        p = np;
    }
    return {p, q};
}

/// True iff u^2 = a (mod p) for some u; exhaustive scan over u in [0,p).
inline bool is_square_mod(const Int& a, const Int& p) {
    require(p >= 1, "is_square_mod: p must be positive");
    Int target = a % p;
    if (target < 0) target += p;
    Int sq = 0;  // u^2 mod p, updated incrementally
    for (Int u = 0; 2 * u <= p; ++u) {
        if (sq == target) return true;
        sq += 2 * u + 1;
        sq %= p;
    }
    return false;
}

/// { u^2 b mod p : u a unit mod p } -- the linking-form equivalence orbit.
inline std::set<Int> unit_square_orbit(const Int& b, const Int& p) {
    require(p >= 1, "unit_square_orbit: p must be positive");
    Int bm = b % p;
    if (bm < 0) bm += p;
    std::set<Int> orbit;
    if (p == 1) {
        orbit.insert(0);
        return orbit;
    }
    for (Int u = 1; u < p; ++u) {
        if (gcd_int(u, p) != 1) continue;
        orbit.insert(u * u % p * bm % p);
    }
    return orbit;
}

/// Modular inverse of a mod p (gcd(a,p) = 1).
inline Int inverse_mod(Int a, const Int& p) {
    require(p >= 1, "inverse_mod: p must be positive");
    a %= p;
    if (a < 0) a += p;
    require(gcd_int(a, p) == 1, "inverse_mod: gcd(a,p) = 1 required");
    if (p == 1) return 0;
    Int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        Int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return t;
}

}  // namespace lspace
