/**
 * @file spinc.hpp
 * @brief Spin^c grading calculus for 2-handle cobordisms between lens
 *        spaces: grading shifts, c_1^2 enumeration, the mod-2 d-invariant
 *        relation, residue pairing tables, and constrained d-invariant
 *        solving.
 *
 * Spin^c structures on a 2-handle cobordism W are indexed by the integer
 * k = <c_1(s), [Sigma]>, which is characteristic: k = [Sigma]^2 (mod 2).
 * Then c_1(s)^2 = k^2 / [Sigma]^2, and restriction to the two boundary
 * lens spaces is determined by k modulo twice each boundary order, so the
 * pairing tables below are indexed by k mod 2|[Sigma]^2|.
 */
#pragma once

#include "lspace/lens.hpp"
#include "lspace/slope.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lspace {

/// Grading change of a Spin^c cobordism map: (c_1^2 - 2*chi - 3*sigma)/4.
inline Rational grading_shift(const Rational& c1_squared, const Int& euler,
                              const Int& signature) {
    return (c1_squared - 2 * Rational(euler) - 3 * Rational(signature)) / 4;
}

/// 2-handle cobordism descriptor between (sums of) lens spaces.
struct CobordismData {
    ConnSum source;
    ConnSum target;
    Int gen_square;  // self-intersection of the H2 generator, nonzero
    Int euler;       // chi(W)
    Int signature;   // sigma(W), in {-1,0,+1}

    CobordismData(ConnSum src, ConnSum tgt, Int gen_sq, Int chi, Int sigma)
        : source(std::move(src)),
          target(std::move(tgt)),
          gen_square(std::move(gen_sq)),
          euler(std::move(chi)),
          signature(std::move(sigma)) {
        require(gen_square != 0, "CobordismData: generator self-intersection must be nonzero");
        require(signature >= -1 && signature <= 1,
                "CobordismData: |signature| <= 1 for a 2-handle cobordism");
        require(sign_of(signature) == sign_of(gen_square),
                "CobordismData: signature sign must match the generator square");
    }

    /// The negative definite surgery-triangle cobordism between fillings of
    /// orders p and p' (generator square -p*p', chi = 1, sigma = -1).
    static CobordismData surgery_triangle(const LensSpace& src, const LensSpace& tgt) {
        return CobordismData(ConnSum(src), ConnSum(tgt), -src.p() * tgt.p(), 1, -1);
    }
};

/// Characteristic values k = gen_square (mod 2) with |k| <= window,
/// paired with c_1^2 = k^2 / gen_square.
inline std::vector<std::pair<Int, Rational>> c1_squares(const Int& gen_square,
                                                        const Int& window) {
    require(gen_square != 0, "c1_squares: generator square must be nonzero");
    require(window >= 0, "c1_squares: window must be nonnegative");
    std::vector<std::pair<Int, Rational>> out;
    Int start = -window;
    if ((start - gen_square) % 2 != 0) ++start;
    for (Int k = start; k <= window; k += 2)
        out.emplace_back(k, make_rational(k * k, gen_square));
    return out;
}

/// The mod-2 d-invariant relation across a 2-handle cobordism with
/// b_2^- = 1: d_target - d_source = (c_1^2 + 1)/4 (mod 2), exactly.
inline bool d_mod2_shift(const Rational& d_source, const Rational& d_target,
                         const Rational& c1_squared) {
    return congruent_mod2(d_target - d_source, (c1_squared + 1) / 4);
}

/// Residue pairing table for a negative definite 2-handle cobordism:
/// conjugation classes {k, -k} of characteristic residues mod
/// 2|gen_square|, each carrying the (d_source, d_target) pairs compatible
/// with the mod-2 relation in some globally multiplicity-consistent
/// assignment.
struct ResiduePairing {
    enum class Status { CONSISTENT, INCONSISTENT };

    struct Entry {
        std::vector<Int> residues;  // the class {k, -k mod m}, sorted
        // pairs realizable in at least one complete assignment
        std::vector<std::pair<Rational, Rational>> pairs;
        bool unique() const { return pairs.size() == 1; }
    };

    Int modulus;  // 2|gen_square|
    std::vector<Entry> entries;  // ordered by smallest residue
    Status status = Status::INCONSISTENT;
};

namespace detail {

/// Exact-cover search: assign each class one pair so that the residues
/// mapped to pair (v,w) number exactly mult_src(v)*mult_tgt(w).
inline bool assignment_exists(const std::vector<std::vector<int>>& feasible,
                              const std::vector<int>& weight,
                              std::vector<Int>& remaining, std::size_t idx,
                              std::size_t forced_class, int forced_pair) {
    if (idx == feasible.size()) {
        for (const Int& r : remaining)
            if (r != 0) return false;
        return true;
    }
    for (int pr : feasible[idx]) {
        if (idx == forced_class && pr != forced_pair) continue;
        if (remaining[static_cast<std::size_t>(pr)] < weight[idx]) continue;
        remaining[static_cast<std::size_t>(pr)] -= weight[idx];
        if (assignment_exists(feasible, weight, remaining, idx + 1, forced_class, forced_pair))
            return remaining[static_cast<std::size_t>(pr)] += weight[idx], true;
        remaining[static_cast<std::size_t>(pr)] += weight[idx];
    }
    return false;
}

}  // namespace detail

/// Builds the table for the negative definite cobordism with generator
/// square gen_square < 0 between two L-spaces with known d-multisets.
/// INCONSISTENT when some class admits no compatible pair or the class
/// sizes cannot be matched to the d-multiset multiplicities.
inline ResiduePairing residue_pairing_table(const LensSpace& l_source,
                                            const LensSpace& l_target,
                                            const Int& gen_square) {
    require(gen_square < 0, "residue_pairing_table: generator square must be negative");
    const Int g = -gen_square;
    const Int m = 2 * g;

    ResiduePairing table;
    table.modulus = m;

    // Distinct d-values with multiplicities on each side.
    auto tally = [](const DInvariants& d) {
        std::map<Rational, Int> t;
        for (const auto& v : d.by_index) ++t[v];
        return t;
    };
    const auto src = tally(d_invariants(l_source));
    const auto tgt = tally(d_invariants(l_target));

    std::vector<std::pair<Rational, Rational>> all_pairs;
    std::vector<Int> capacity;
    for (const auto& [v, mv] : src)
        for (const auto& [w, mw] : tgt) {
            all_pairs.emplace_back(v, w);
            capacity.push_back(mv * mw);
        }

    // Conjugation classes {k, -k} of characteristic residues mod m.
    std::vector<std::vector<Int>> classes;
    for (Int k = 0; k < m; ++k) {
        if ((k - gen_square) % 2 != 0) continue;
        Int neg = (m - k) % m;
        if (neg < k) continue;
        if (neg == k)
            classes.push_back({k});
        else
            classes.push_back({k, neg});
    }

    std::vector<std::vector<int>> feasible(classes.size());
    std::vector<int> weight(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Int& k = classes[i].front();
        Rational c1sq = make_rational(k * k, gen_square);
        weight[i] = static_cast<int>(classes[i].size());
        for (std::size_t j = 0; j < all_pairs.size(); ++j)
            if (d_mod2_shift(all_pairs[j].first, all_pairs[j].second, c1sq))
                feasible[i].push_back(static_cast<int>(j));
    }

    std::vector<Int> remaining = capacity;
    bool consistent = detail::assignment_exists(feasible, weight, remaining,
                                                0, classes.size(), -1);
    table.status = consistent ? ResiduePairing::Status::CONSISTENT
                              : ResiduePairing::Status::INCONSISTENT;

    for (std::size_t i = 0; i < classes.size(); ++i) {
        ResiduePairing::Entry e;
        e.residues = classes[i];
        if (consistent) {
            for (int pr : feasible[i]) {
                std::vector<Int> rem = capacity;
                if (detail::assignment_exists(feasible, weight, rem, 0, i, pr))
                    e.pairs.push_back(all_pairs[static_cast<std::size_t>(pr)]);
            }
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

/// Verifies d(L(p,1), n) = ((2n+p)^2/(4p) - 5/4) + 1 (mod 2) for every n
/// in a full period; the difference is -2n, so this must always hold.
inline bool parity_identity_check(const Int& p) {
    require(p >= 1, "parity_identity_check: p must be positive");
    for (Int n = 0; n < p; ++n) {
        Rational shifted = make_rational((2 * n + p) * (2 * n + p), 4 * p)
                           - make_rational(5, 4) + 1;
        if (!congruent_mod2(d_Lp1(p, n), shifted)) return false;
    }
    return true;
}

/// Result of the constrained d-invariant search.
struct SolveDResult {
    enum class Status { UNIQUE, NO_SOLUTION, AMBIGUOUS };
    Status status = Status::NO_SOLUTION;
    std::vector<std::vector<Rational>> multisets;  // sorted, deduplicated
};

/// Enumerates d-invariant multisets {d_i} for a rational homology sphere
/// whose linking form matches the model lens space: d_i agrees with the
/// model's i-th d-invariant mod 2, conjugate Spin^c structures share one
/// value, every d_i lies in [lower_bound, lower_bound + 2*search_radius],
/// and the values sum to d_sum.
inline SolveDResult solve_d_invariants(const LinkingForm& form, const Rational& d_sum,
                                       const Rational& lower_bound, const LensSpace& model,
                                       const Int& search_radius) {
    require(search_radius >= 1, "solve_d_invariants: search radius must be positive");
    require(linking_forms_equivalent(form, LinkingForm::of_lens_space(model)),
            "solve_d_invariants: linking form does not match the model lens space");

    // Conjugation orbits of the model: (representative d-value, orbit size).
    DInvariants model_d = d_invariants(model);
    std::vector<std::pair<Rational, int>> orbits;
    std::vector<bool> seen(static_cast<std::size_t>(model.p()), false);
    for (Int i = 0; i < model.p(); ++i) {
        auto ii = static_cast<std::size_t>(i);
        if (seen[ii]) continue;
        Int c = conjugate_spinc_index(model, i);
        auto ci = static_cast<std::size_t>(c);
        seen[ii] = seen[ci] = true;
        orbits.emplace_back(model_d.by_index[ii], c == i ? 1 : 2);
    }

    const Rational upper = lower_bound + 2 * Rational(search_radius);
    std::vector<std::vector<Rational>> found;

    std::vector<Rational> chosen(orbits.size());
    auto record = [&](void) {
        std::vector<Rational> mult;
        for (std::size_t i = 0; i < orbits.size(); ++i)
            for (int c = 0; c < orbits[i].second; ++c) mult.push_back(chosen[i]);
        std::sort(mult.begin(), mult.end());
        if (std::find(found.begin(), found.end(), mult) == found.end())
            found.push_back(std::move(mult));
    };
    auto rec = [&](auto&& self, std::size_t idx, const Rational& remaining) -> void {
        if (idx == orbits.size()) {
            if (remaining == 0) record();
            return;
        }
        // smallest value >= lower_bound in the mod-2 class of the orbit
        Rational v = orbits[idx].first;
        Rational steps = (lower_bound - v) / 2;
        Int up = floor_rat(steps);
        if (Rational(up) != steps) ++up;  // ceil
        v += 2 * Rational(up);
        for (; v <= upper; v += 2) {
            chosen[idx] = v;
            self(self, idx + 1, remaining - orbits[idx].second * v);
        }
    };
    rec(rec, 0, d_sum);

    SolveDResult result;
    std::sort(found.begin(), found.end());
    result.multisets = std::move(found);
    if (result.multisets.empty())
        result.status = SolveDResult::Status::NO_SOLUTION;
    else if (result.multisets.size() == 1)
        result.status = SolveDResult::Status::UNIQUE;
    else
        result.status = SolveDResult::Status::AMBIGUOUS;
    return result;
}

/// Sign of the 2-handle cobordism from the gamma-filling to the
/// gamma'-filling (Kronheimer-Mrowka rule): with orientations fixed by
/// gamma . gamma' = -1, the signature is +1 when gamma . lambda and
/// gamma' . lambda share a sign, -1 when they differ, 0 when either
/// filling is longitudinal.
inline int cobordism_sign(const Slope& gamma, const Slope& gamma_prime) {
    Int cross = gamma.mu_coeff() * gamma_prime.lambda_coeff()
                - gamma.lambda_coeff() * gamma_prime.mu_coeff();
    require(abs_int(cross) == 1, "cobordism_sign: slopes must be at distance one");
    int s = sign_of(gamma.mu_coeff() * gamma_prime.mu_coeff());
    return cross == 1 ? s : -s;
}

}  // namespace lspace
