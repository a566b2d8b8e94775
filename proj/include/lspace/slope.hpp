/**
 * @file slope.hpp
 * @brief Slope arithmetic on the boundary torus of a rational homology
 *        solid torus, in a fixed (meridian, rational longitude) basis.
 *
 * Slopes are unoriented primitive classes a*mu + b*lambda, stored with
 * a >= 0 (and b >= 0 when a = 0). Everything here is coordinate algebra;
 * the 3-manifold itself is never modeled.
 */
#pragma once

#include "lspace/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace lspace {

class Slope {
public:
    Slope(Int mu_coeff, Int lambda_coeff)
        : mu_(std::move(mu_coeff)), lam_(std::move(lambda_coeff)) {
        require(mu_ != 0 || lam_ != 0, "Slope: (0,0) is not a slope");
        Int g = gcd_int(abs_int(mu_), abs_int(lam_));
        mu_ /= g;
        lam_ /= g;
        if (mu_ < 0 || (mu_ == 0 && lam_ < 0)) {
            mu_ = -mu_;
            lam_ = -lam_;
        }
    }

    static Slope meridian() { return Slope(1, 0); }
    static Slope longitude() { return Slope(0, 1); }

    const Int& mu_coeff() const { return mu_; }
    const Int& lambda_coeff() const { return lam_; }

    std::string display() const { return mu_.str() + "," + lam_.str(); }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.mu_ != b.mu_) return a.mu_ < b.mu_;
        return a.lam_ < b.lam_;
    }

private:
    Int mu_, lam_;
};

/// Geometric intersection number |ad - bc| of slopes (a,b) and (c,d).
inline Int distance(const Slope& s1, const Slope& s2) {
    return abs_int(s1.mu_coeff() * s2.lambda_coeff() - s1.lambda_coeff() * s2.mu_coeff());
}

/// |H1| of the Dehn filling along s of a homology S^1 x D^2:
/// the distance to the rational longitude, i.e. |mu_coeff|.
/// 0 encodes the longitudinal filling (b1 > 0).
inline Int filling_order(const Slope& s) { return abs_int(s.mu_coeff()); }

/// Basis normalization for consecutive fillings: given slopes
/// gamma = p mu0 + c lambda and gamma' = (p+1) mu0 + d lambda at distance
/// one, returns (k, eps) with k = d - c and eps = (p+1)c - pd, so that in
/// the basis mu = mu0 + k lambda:
///     gamma = p mu + eps lambda,   gamma' = (p+1) mu + eps lambda.
struct ConsecutiveNormalization {
    Int k;
    Int epsilon;  // +1 or -1
};

inline ConsecutiveNormalization normalize_consecutive(const Int& p, const Int& c,
                                                      const Int& d) {
    require(p >= 1, "normalize_consecutive: p must be positive");
    Int eps = (p + 1) * c - p * d;
    require(eps == 1 || eps == -1,
            "normalize_consecutive: slopes must be at distance one ((p+1)c - pd = +-1)");
    return {d - c, eps};
}

/// Half-integer normalization: an RP^3 filling slope 2 mu0 + n lambda with
/// n = 2k+1 odd becomes 2 mu' + lambda for mu' = mu0 + k lambda.
struct HalfIntegerNormalization {
    Int k;
    Slope normalized_slope;  // always (2,1) in the new basis
};

inline HalfIntegerNormalization normalize_half_integer(const Int& n) {
    require(n % 2 != 0, "normalize_half_integer: n must be odd");
    return {(n - 1) / 2, Slope(2, 1)};
}

/// All slopes of a given filling order at distance one from s,
/// with lambda-coefficient reduced into [0, order).
inline std::vector<Slope> distance_one_companions(const Slope& s, const Int& order) {
    require(order >= 1, "distance_one_companions: order must be positive");
    std::vector<Slope> out;
    for (Int l = 0; l < order; ++l) {
        if (gcd_int(order, l) != 1) continue;
        Slope t(order, l);
        if (distance(s, t) == 1) out.push_back(t);
    }
    return out;
}

/// Lemma "distance-one" obstruction: for a primitive knot, the distance
/// between two filling slopes with |H1| = p and p' is a multiple of
/// gcd(p,p'); a gcd > 1 therefore forbids distance-one pairs.
inline Int gcd_obstruction(const Int& p, const Int& p_prime) {
    require(p >= 1 && p_prime >= 1, "gcd_obstruction: orders must be positive");
    return gcd_int(p, p_prime);
}

}  // namespace lspace
