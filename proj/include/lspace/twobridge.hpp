/**
 * @file twobridge.hpp
 * @brief Two-bridge links and their connected sums: determinants, branched
 *        double covers, the small-determinant census, and 3-pretzel
 *        determinants.
 *
 * A two-bridge link is identified with its fraction p/q; the branched
 * double cover is L(p,q) and the fraction is a complete invariant, so no
 * diagrammatic data is stored. Fractions are kept in the lens-space normal
 * form (q ~ q^{-1} mod p).
 */
#pragma once

#include "lspace/lens.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lspace {

/// b(p,q): determinant p, branched double cover L(p,q); one component
/// when p is odd, two when p is even. p = 1 is the unknot.
class TwoBridgeLink {
public:
    TwoBridgeLink(const Int& p, const Int& q) : cover_(p, q) {}
    explicit TwoBridgeLink(LensSpace cover) : cover_(std::move(cover)) {}

    static TwoBridgeLink unknot() { return TwoBridgeLink(LensSpace::s3()); }

    const Int& p() const { return cover_.p(); }
    const Int& q() const { return cover_.q(); }
    const LensSpace& cover() const { return cover_; }
    bool is_unknot() const { return cover_.is_s3(); }
    int components() const { return cover_.p() % 2 == 0 ? 2 : 1; }

    TwoBridgeLink normalized() const { return TwoBridgeLink(cover_.normalized()); }
    TwoBridgeLink mirror() const { return TwoBridgeLink(cover_.reversed()); }

    std::string fraction() const {
        return is_unknot() ? "1/0" : p().str() + "/" + q().str();
    }

    friend bool operator==(const TwoBridgeLink&, const TwoBridgeLink&) = default;
    friend bool operator!=(const TwoBridgeLink& a, const TwoBridgeLink& b) { return !(a == b); }
    friend bool operator<(const TwoBridgeLink& a, const TwoBridgeLink& b) {
        return a.cover_ < b.cover_;
    }

private:
    LensSpace cover_;
};

/// Connected sum of two-bridge links; the empty sum is the unknot.
class LinkSum {
public:
    LinkSum() = default;
    explicit LinkSum(std::vector<TwoBridgeLink> summands) {
        for (auto& l : summands)
            if (!l.is_unknot()) summands_.push_back(l.normalized());
        std::sort(summands_.begin(), summands_.end());
    }
    explicit LinkSum(const TwoBridgeLink& l) : LinkSum(std::vector<TwoBridgeLink>{l}) {}

    const std::vector<TwoBridgeLink>& summands() const { return summands_; }
    bool is_unknot() const { return summands_.empty(); }

    Int determinant() const {
        Int n = 1;
        for (const auto& l : summands_) n *= l.p();
        return n;
    }

    LinkSum mirror() const {
        std::vector<TwoBridgeLink> s;
        s.reserve(summands_.size());
        for (const auto& l : summands_) s.push_back(l.mirror());
        return LinkSum(std::move(s));
    }

    std::string fractions() const {
        if (summands_.empty()) return "1/0";
        std::string out;
        for (auto it = summands_.rbegin(); it != summands_.rend(); ++it) {
            if (!out.empty()) out += " # ";
            out += it->fraction();
        }
        return out;
    }

    friend bool operator==(const LinkSum&, const LinkSum&) = default;
    friend bool operator!=(const LinkSum& a, const LinkSum& b) { return !(a == b); }
    friend bool operator<(const LinkSum& a, const LinkSum& b) {
        Int da = a.determinant(), db = b.determinant();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.summands_.begin(), a.summands_.end(),
                                            b.summands_.begin(), b.summands_.end());
    }

private:
    std::vector<TwoBridgeLink> summands_;
};

/// Branched double cover: b(p,q) |-> L(p,q) summand-wise; unknot |-> S^3.
inline ConnSum branched_double_cover(const LinkSum& l) {
    std::vector<LensSpace> covers;
    covers.reserve(l.summands().size());
    for (const auto& s : l.summands()) covers.push_back(s.cover());
    return ConnSum(std::move(covers));
}

/// det(L) = |H1 of the branched double cover| = product of the fractions' p.
inline Int det_link(const LinkSum& l) { return branched_double_cover(l).h1_order(); }

/// Display names for the small-determinant census, keyed by normal form.
/// Each entry records where the fraction identity comes from.
struct LinkName {
    Int p, q;  // normal form of one summand
    const char* name;
    const char* provenance;
};

inline const std::vector<LinkName>& link_name_table() {
    static const std::vector<LinkName> table = {
        {2, 1, "T(2,2) (Hopf link)", "torus link convention T(2,n) = b(n,1)"},
        {3, 1, "T(2,3) (trefoil)", "torus link convention T(2,n) = b(n,1)"},
        {3, 2, "T(2,-3) (mirror trefoil)", "mirror of b(3,1)"},
        {4, 1, "T(2,4)", "torus link convention T(2,n) = b(n,1)"},
        {4, 3, "T(2,-4)", "mirror of b(4,1)"},
        {5, 1, "T(2,5)", "torus link convention T(2,n) = b(n,1)"},
        {5, 4, "T(2,-5)", "mirror of b(5,1)"},
        {5, 2, "4_1 (figure-eight)", "knot table: 4_1 = b(5,2), amphichiral"},
        {6, 1, "T(2,6)", "torus link convention T(2,n) = b(n,1)"},
        {6, 5, "T(2,-6)", "mirror of b(6,1)"},
        {7, 1, "T(2,7)", "torus link convention T(2,n) = b(n,1)"},
        {7, 6, "T(2,-7)", "mirror of b(7,1)"},
        {7, 3, "5_2", "knot table: 5_2 = b(7,3)"},
        {7, 2, "m5_2 (mirror of 5_2)", "mirror of b(7,3): b(7,4) ~ b(7,2)"},
    };
    return table;
}

inline const LinkName* link_name_entry(const TwoBridgeLink& l) {
    for (const auto& e : link_name_table())
        if (e.p == l.p() && e.q == l.q()) return &e;
    return nullptr;
}

inline std::string link_display_name(const LinkSum& l) {
    if (l.is_unknot()) return "unknot";
    std::string out;
    for (auto it = l.summands().rbegin(); it != l.summands().rend(); ++it) {
        const LinkName* e = link_name_entry(*it);
        if (!out.empty()) out += " # ";
        out += e ? e->name : "b(" + it->fraction() + ")";
    }
    return out;
}

/// All connected sums of two-bridge links with determinant n, as multisets
/// of lens-space normal forms, sorted canonically.
inline std::vector<LinkSum> census(const Int& n, const Int& max_det = 64) {
    require(n >= 1, "census: determinant must be positive");
    require(n <= max_det, "census: determinant exceeds the supported bound");
    std::vector<LinkSum> out;
    std::vector<TwoBridgeLink> current;
    // Factor n into parts >= 2 (nondecreasing) and pick a normal form for
    // each part; within equal parts, forms are kept nondecreasing so each
    // multiset appears once.
    auto rec = [&](auto&& self, const Int& remaining, const Int& min_part) -> void {
        if (remaining == 1) {
            out.push_back(LinkSum(current));
            return;
        }
        for (Int d = min_part; d <= remaining; ++d) {
            if (remaining % d != 0) continue;
            for (const auto& form : lens_normal_forms(d)) {
                if (!current.empty() && current.back().p() == d &&
                    form.q() < current.back().q())
                    continue;
                current.emplace_back(form);
                self(self, remaining / d, d);
                current.pop_back();
            }
        }
    };
    rec(rec, n, 2);
    std::sort(out.begin(), out.end());
    return out;
}

/// Determinant of the 3-strand pretzel P(e1,e2,e3): |e1 e2 + e2 e3 + e3 e1|.
inline Int pretzel_det(const Int& e1, const Int& e2, const Int& e3) {
    return abs_int(e1 * e2 + e2 * e3 + e3 * e1);
}

}  // namespace lspace
