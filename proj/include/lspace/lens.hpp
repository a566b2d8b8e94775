/**
 * @file lens.hpp
 * @brief Lens spaces and connected sums of lens spaces: normal forms,
 *        d-invariants, Casson-Walker invariants, linking forms.
 *
 * Convention throughout: L(p,q) is p/q-surgery on the unknot in S^3, and
 * -L(p,q) = L(p,p-q). The d-invariant multiset of L(p,q) is computed by
 * the standard two-term recursion
 *
 *     d(L(p,q), i) = ((2i+1-p-q)^2 - pq)/(4pq) - d(L(q, p mod q), i mod q)
 *
 * with d(S^3) = 0 and i in [0,p). This indexing is calibrated so that
 * d(L(p,1), i) = (2i-p)^2/(4p) - 1/4 holds on the nose, and the multisets
 * of L(3,2) and L(5,3) come out as {-1/2, 1/6, 1/6} and
 * {-2/5, -2/5, 0, 2/5, 2/5}. Spin^c conjugation acts on indices by
 * i |-> (p+q-1-i) mod p.
 */
#pragma once

#include "lspace/exact.hpp"
#include "lspace/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace lspace {

/// Oriented lens space L(p,q), gcd(p,q) = 1, q reduced into [1,p).
/// p = 1 denotes S^3 (stored as q = 0).
class LensSpace {
public:
    LensSpace(Int p, Int q) : p_(std::move(p)) {
        require(p_ >= 1, "LensSpace: p must be positive");
        q_ = q % p_;
        if (q_ < 0) q_ += p_;
        if (p_ == 1) {
            q_ = 0;
        } else {
            require(q_ != 0 && gcd_int(p_, q_) == 1, "LensSpace: gcd(p,q) = 1 required");
        }
    }

    static LensSpace s3() { return LensSpace(1, 0); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    bool is_s3() const { return p_ == 1; }

    /// Canonical representative of the oriented homeomorphism class:
    /// smallest residue among {q, q^{-1} mod p}.
    LensSpace normalized() const {
        if (p_ == 1) return *this;
        Int qi = inverse_mod(q_, p_);
        return LensSpace(p_, std::min(q_, qi));
    }

    /// -L(p,q) = L(p, p-q), returned normalized.
    LensSpace reversed() const {
        if (p_ == 1) return *this;
        return LensSpace(p_, p_ - q_).normalized();
    }

    std::string display() const {
        if (p_ == 1) return "S^3";
        if (p_ == 2) return "RP^3";
        return "L(" + p_.str() + "," + q_.str() + ")";
    }

    friend bool operator==(const LensSpace& a, const LensSpace& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const LensSpace& a, const LensSpace& b) { return !(a == b); }
    friend bool operator<(const LensSpace& a, const LensSpace& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.q_ < b.q_;
    }

private:
    Int p_, q_;
};

inline LensSpace normalize(const LensSpace& l) { return l.normalized(); }
inline LensSpace reverse_orientation(const LensSpace& l) { return l.reversed(); }

/// All oriented normal forms of lens spaces with |H1| = p.
inline std::vector<LensSpace> lens_normal_forms(const Int& p) {
    require(p >= 1, "lens_normal_forms: p must be positive");
    std::vector<LensSpace> out;
    if (p == 1) {
        out.push_back(LensSpace::s3());
        return out;
    }
    std::set<Int> seen;
    for (Int q = 1; q < p; ++q) {
        if (gcd_int(q, p) != 1) continue;
        Int rep = std::min(q, inverse_mod(q, p));
        if (seen.insert(rep).second) out.emplace_back(p, rep);
    }
    return out;
}

/// Formal connected sum of lens spaces; the empty sum is S^3.
/// Summands are kept sorted; S^3 summands are dropped.
class ConnSum {
public:
    ConnSum() = default;
    explicit ConnSum(std::vector<LensSpace> summands) {
        for (auto& l : summands)
            if (!l.is_s3()) summands_.push_back(l);
        std::sort(summands_.begin(), summands_.end());
    }
    explicit ConnSum(const LensSpace& l) : ConnSum(std::vector<LensSpace>{l}) {}

    static ConnSum s3() { return ConnSum(); }

    const std::vector<LensSpace>& summands() const { return summands_; }
    bool is_s3() const { return summands_.empty(); }

    Int h1_order() const {
        Int n = 1;
        for (const auto& l : summands_) n *= l.p();
        return n;
    }

    ConnSum normalized() const {
        std::vector<LensSpace> s;
        s.reserve(summands_.size());
        for (const auto& l : summands_) s.push_back(l.normalized());
        return ConnSum(std::move(s));
    }

    ConnSum reversed() const {
        std::vector<LensSpace> s;
        s.reserve(summands_.size());
        for (const auto& l : summands_) s.push_back(l.reversed());
        return ConnSum(std::move(s));
    }

    ConnSum connected_sum(const ConnSum& other) const {
        std::vector<LensSpace> s = summands_;
        s.insert(s.end(), other.summands_.begin(), other.summands_.end());
        return ConnSum(std::move(s));
    }

    /// Summands printed largest-first, e.g. "L(3,1) # RP^3".
    std::string display() const {
        if (summands_.empty()) return "S^3";
        std::string out;
        for (auto it = summands_.rbegin(); it != summands_.rend(); ++it) {
            if (!out.empty()) out += " # ";
            out += it->display();
        }
        return out;
    }

    friend bool operator==(const ConnSum&, const ConnSum&) = default;
    friend bool operator!=(const ConnSum& a, const ConnSum& b) { return !(a == b); }
    friend bool operator<(const ConnSum& a, const ConnSum& b) {
        Int na = a.h1_order(), nb = b.h1_order();
        if (na != nb) return na < nb;
        return std::lexicographical_compare(a.summands_.begin(), a.summands_.end(),
                                            b.summands_.begin(), b.summands_.end());
    }

private:
    std::vector<LensSpace> summands_;
};

/// d-invariants of a rational homology sphere, indexed by Spin^c label,
/// with the sorted multiset view used for comparisons.
struct DInvariants {
    std::vector<Rational> by_index;

    std::vector<Rational> multiset() const {
        std::vector<Rational> m = by_index;
        std::sort(m.begin(), m.end());
        return m;
    }
    Rational sum() const {
        Rational s(0);
        for (const auto& d : by_index) s += d;
        return s;
    }
};

/// d(L(p,1), i) = (2i-p)^2/(4p) - 1/4.
inline Rational d_Lp1(const Int& p, const Int& i) {
    require(p >= 1, "d_Lp1: p must be positive");
    require(i >= 0 && i < p, "d_Lp1: index must satisfy 0 <= i < p");
    return make_rational((2 * i - p) * (2 * i - p), 4 * p) - make_rational(1, 4);
}

/// All p correction terms of L(p,q), indexed by i in [0,p).
///
/// Iterative evaluation of the recursion along the Euclidean chain
/// (p,q) -> (q, p mod q) -> ...; no shared state, safe to call
/// concurrently.
inline DInvariants d_invariants(const LensSpace& l) {
    std::vector<std::pair<Int, Int>> chain;  // (p,q) down to (1,0)
    Int p = l.p(), q = l.q();
    while (p > 1) {
        chain.emplace_back(p, q);
        Int r = p % q;
        p = q;
        q = r;
    }
    std::vector<Rational> level{Rational(0)};  // d(S^3) = 0
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Int& P = it->first;
        const Int& Q = it->second;
        std::vector<Rational> next;
        next.reserve(static_cast<std::size_t>(P));
        for (Int i = 0; i < P; ++i) {
            Int t = 2 * i + 1 - P - Q;
            Rational term = make_rational(t * t - P * Q, 4 * P * Q);
            next.push_back(term - level[static_cast<std::size_t>(i % Q)]);
        }
        level = std::move(next);
    }
    return DInvariants{std::move(level)};
}

/// Spin^c conjugation on the indexing of d_invariants(L(p,q)).
inline Int conjugate_spinc_index(const LensSpace& l, const Int& i) {
    require(i >= 0 && i < l.p(), "conjugate_spinc_index: 0 <= i < p required");
    return ((l.p() + l.q() - 1 - i) % l.p() + l.p()) % l.p();
}

/// d-invariants of a connected sum: all sums across summand Spin^c
/// structures (|H1| values in total).
inline DInvariants d_invariants(const ConnSum& y) {
    std::vector<Rational> acc{Rational(0)};
    for (const auto& l : y.summands()) {
        DInvariants dl = d_invariants(l);
        std::vector<Rational> next;
        next.reserve(acc.size() * dl.by_index.size());
        for (const auto& a : acc)
            for (const auto& d : dl.by_index) next.push_back(a + d);
        acc = std::move(next);
    }
    return DInvariants{std::move(acc)};
}

/// Casson-Walker invariant of a lens space through the L-space case of the
/// sum-of-d-invariants formula: lambda = -(1/2p) * sum_i d(L(p,q), i).
inline Rational lambda_lens(const LensSpace& l) {
    return -make_rational(1, 2 * l.p()) * d_invariants(l).sum();
}

/// lambda is additive under connected sum.
inline Rational lambda_conn_sum(const ConnSum& y) {
    Rational s(0);
    for (const auto& l : y.summands()) s += lambda_lens(l);
    return s;
}

/// lambda(S^3_{a/b}(U)) for any a != 0, i.e. of +-L(|a|, b mod |a|).
inline Rational lambda_surgery_on_unknot(const Int& a, const Int& b) {
    require(a != 0, "lambda_surgery_on_unknot: a must be nonzero");
    if (a < 0) return -lambda_surgery_on_unknot(-a, -b);
    if (a == 1) return Rational(0);
    return lambda_lens(LensSpace(a, b));
}

/// Casson-Walker surgery formula: lambda(Y_{a/b}(K)) for a knot K in a
/// homology sphere Y, given lambda(Y) and A(K) = Delta''_K(1)/2:
///
///     lambda(Y_{a/b}(K)) = lambda(S^3_{a/b}(U)) + lambda(Y) + (b/a) A(K).
inline Rational cw_surgery(const Rational& lambda_y, const Rational& a_k,
                           const Int& a, const Int& b) {
    require(a != 0, "cw_surgery: surgery coefficient a must be nonzero");
    require(b != 0, "cw_surgery: surgery coefficient b must be nonzero");
    require(gcd_int(a, b) == 1, "cw_surgery: gcd(a,b) = 1 required");
    return lambda_surgery_on_unknot(a, b) + lambda_y + make_rational(b, 1) / make_rational(a, 1) * a_k;
}

/// Linking form of a rational homology sphere with H1 a sum of cyclic
/// groups: one reduced fraction a/p per cyclic summand, a in [1,p) a unit.
/// Equivalence per summand is a ~ u^2 a for units u.
class LinkingForm {
public:
    LinkingForm() = default;

    /// Form a/p on Z/p (p > 1; a reduced mod p, sign folded in).
    static LinkingForm cyclic(const Int& a, const Int& p) {
        require(p >= 1, "LinkingForm: group order must be positive");
        LinkingForm f;
        if (p == 1) return f;  // trivial group, trivial form
        Int am = a % p;
        if (am < 0) am += p;
        require(am != 0 && gcd_int(am, p) == 1,
                "LinkingForm: numerator must be a unit mod p");
        f.fractions_.emplace_back(am, p);
        f.sort_();
        return f;
    }

    static LinkingForm of_lens_space(const LensSpace& l) {
        // L(p,q) = p/q-surgery on the unknot has linking form q/p.
        return l.is_s3() ? LinkingForm() : cyclic(l.q(), l.p());
    }

    static LinkingForm of_conn_sum(const ConnSum& y) {
        LinkingForm f;
        for (const auto& l : y.summands()) f = f.direct_sum(of_lens_space(l));
        return f;
    }

    LinkingForm direct_sum(const LinkingForm& other) const {
        LinkingForm f = *this;
        f.fractions_.insert(f.fractions_.end(), other.fractions_.begin(),
                            other.fractions_.end());
        f.sort_();
        return f;
    }

    const std::vector<std::pair<Int, Int>>& fractions() const { return fractions_; }

    std::string display() const {
        if (fractions_.empty()) return "0";
        std::string out;
        for (const auto& [a, p] : fractions_) {
            if (!out.empty()) out += " + ";
            out += a.str() + "/" + p.str();
        }
        return out;
    }

private:
    void sort_() { std::sort(fractions_.begin(), fractions_.end()); }
    std::vector<std::pair<Int, Int>> fractions_;  // (a, p), sorted
};

/// Linking form of Y_{p/q}(K) for K a knot in a homology sphere: q/p on
/// Z/|p| (the sign of p is folded into the residue).
inline LinkingForm linking_form_of_surgery(const Int& p, const Int& q) {
    require(p != 0, "linking_form_of_surgery: p must be nonzero");
    require(gcd_int(p, q) == 1, "linking_form_of_surgery: gcd(p,q) = 1 required");
    Int pp = abs_int(p);
    Int a = p < 0 ? Int(-q) : q;
    return LinkingForm::cyclic(a, pp);
}

/// Equivalence of linking forms: summand orders must match as multisets;
/// summands of equal order are matched up to unit-square equivalence.
/// Throws if the group orders disagree.
inline bool linking_forms_equivalent(const LinkingForm& f1, const LinkingForm& f2) {
    const auto& a = f1.fractions();
    const auto& b = f2.fractions();
    require(a.size() == b.size(), "linking_forms_equivalent: group orders must match");
    std::map<Int, std::vector<Int>> by_order_a, by_order_b;
    for (const auto& [r, p] : a) by_order_a[p].push_back(r);
    for (const auto& [r, p] : b) by_order_b[p].push_back(r);
    for (const auto& [p, ra] : by_order_a)
        require(by_order_b.count(p) && by_order_b[p].size() == ra.size(),
                "linking_forms_equivalent: group orders must match");

    for (const auto& [p, ra] : by_order_a) {
        auto& rb = by_order_b[p];
        // Greedy matching inside one order is enough: orbits partition the
        // residues, so matching is just comparing orbit multisets.
        std::vector<bool> used(rb.size(), false);
        for (const Int& x : ra) {
            auto orbit = unit_square_orbit(x, p);
            bool found = false;
            for (std::size_t j = 0; j < rb.size(); ++j) {
                if (!used[j] && orbit.count(rb[j])) {
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace lspace
