#include "lspace/spinc.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace lspace;

namespace {

Rational rat(int n, int d) { return make_rational(n, d); }

const ResiduePairing::Entry* entry_for(const ResiduePairing& t, int k) {
    for (const auto& e : t.entries)
        for (const auto& r : e.residues)
            if (r == k) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("grading shift") {
    // trace of p-surgery: chi = sigma = 1, c1^2 = (2n+p)^2/p
    for (int p : {2, 5, 7})
        for (int n = -3; n <= 3; ++n) {
            Rational c1 = rat((2 * n + p) * (2 * n + p), p);
            CHECK(grading_shift(c1, 1, 1) ==
                  rat((2 * n + p) * (2 * n + p), 4 * p) - rat(5, 4));
        }
    // negative definite 2-handle: (c1^2 + 1)/4
    CHECK(grading_shift(rat(-16, 10), 1, -1) == (rat(-16, 10) + 1) / 4);
    CHECK(grading_shift(Rational(0), 0, 0) == 0);
    // linear in c1^2 with slope 1/4
    CHECK(grading_shift(rat(3, 7) + 4, 1, -1) - grading_shift(rat(3, 7), 1, -1) == 1);
}

TEST_CASE("cobordism data invariants") {
    CHECK_THROWS_AS(CobordismData(ConnSum::s3(), ConnSum::s3(), 0, 1, 0),
                    precondition_error);
    CHECK_THROWS_AS(CobordismData(ConnSum::s3(), ConnSum::s3(), -4, 1, 2),
                    precondition_error);
    CHECK_THROWS_AS(CobordismData(ConnSum::s3(), ConnSum::s3(), -4, 1, 1),
                    precondition_error);
    auto w = CobordismData::surgery_triangle(LensSpace(5, 3), LensSpace(2, 1));
    CHECK(w.gen_square == -10);
    CHECK(w.euler == 1);
    CHECK(w.signature == -1);
}

TEST_CASE("c1_squares") {
    auto odd = c1_squares(5, 7);
    for (const auto& [k, c] : odd) {
        CHECK(k % 2 != 0);
        CHECK(c == rat(1, 5) * Rational(k * k));
    }
    CHECK(odd.front().first == -7);
    CHECK(odd.back().first == 7);

    auto even = c1_squares(-10, 8);
    for (const auto& [k, c] : even) {
        CHECK(k % 2 == 0);
        CHECK(c == rat(-1, 10) * Rational(k * k));
    }
    auto unit = c1_squares(1, 5);
    for (const auto& [k, c] : unit) CHECK(c == k * k);
    CHECK_THROWS_AS(c1_squares(0, 3), precondition_error);
}

TEST_CASE("d_mod2_shift") {
    CHECK(d_mod2_shift(rat(1, 3), rat(1, 3), Rational(-1)));
    // k^2 = 64 (mod 80): d(L(5,3)) = -2/5 -> d(RP^3) = 1/4 with c1^2 = -64/10
    CHECK(d_mod2_shift(rat(-2, 5), rat(1, 4), rat(-64, 10)));
    CHECK(d_mod2_shift(rat(-2, 5), rat(1, 4), rat(-144, 10)));  // 144 = 64 (mod 80)
    CHECK_FALSE(d_mod2_shift(rat(-2, 5), rat(1, 4), rat(-16, 10)));
    // k^2 = 4 (mod 80): d(L(5,3)) = -2/5 -> d(RP^3) = -1/4
    CHECK(d_mod2_shift(rat(-2, 5), rat(-1, 4), rat(-4, 10)));
    // the relation is direction-sensitive: the swapped pair fails
    CHECK_FALSE(d_mod2_shift(rat(-1, 4), rat(-2, 5), rat(-4, 10)));
}

TEST_CASE("residue table: L(5,3) -> RP^3 with generator square -10") {
    auto t = residue_pairing_table(LensSpace(5, 3), LensSpace(2, 1), -10);
    REQUIRE(t.status == ResiduePairing::Status::CONSISTENT);
    CHECK(t.modulus == 20);
    REQUIRE(t.entries.size() == 6);

    auto expect = [&](std::vector<int> residues, Rational ds, Rational dt) {
        const auto* e = entry_for(t, residues.front());
        REQUIRE(e != nullptr);
        REQUIRE(e->residues.size() == residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i)
            CHECK(e->residues[i] == residues[i]);
        REQUIRE(e->unique());
        CHECK(e->pairs.front() == std::pair<Rational, Rational>{ds, dt});
    };
    expect({0}, Rational(0), rat(1, 4));
    expect({4, 16}, rat(2, 5), rat(1, 4));
    expect({8, 12}, rat(-2, 5), rat(1, 4));
    expect({10}, Rational(0), rat(-1, 4));
    expect({6, 14}, rat(2, 5), rat(-1, 4));
    expect({2, 18}, rat(-2, 5), rat(-1, 4));

    // conjugation invariance and the exact mod-2 relation for every entry
    for (const auto& e : t.entries) {
        const Int& k = e.residues.front();
        const Int neg = (20 - k) % 20;
        const auto* mirror = entry_for(t, static_cast<int>(neg));
        REQUIRE(mirror == &e);  // class contains its negation
        for (const auto& [ds, dt] : e.pairs)
            CHECK(d_mod2_shift(ds, dt, rat(-1, 10) * Rational(k * k)));
    }

    // residue -> d_source hits the L(5,3) multiset with multiplicity (2,1,2)
    // within each fixed d_target value
    for (Rational dt : {rat(1, 4), rat(-1, 4)}) {
        std::map<Rational, int> counts;
        for (const auto& e : t.entries)
            if (e.pairs.front().second == dt)
                counts[e.pairs.front().first] += static_cast<int>(e.residues.size());
        CHECK(counts[rat(-2, 5)] == 2);
        CHECK(counts[Rational(0)] == 1);
        CHECK(counts[rat(2, 5)] == 2);
    }
}

TEST_CASE("residue table: L(3,2) -> RP^3 with generator square -6") {
    auto t = residue_pairing_table(LensSpace(3, 2), LensSpace(2, 1), -6);
    REQUIRE(t.status == ResiduePairing::Status::CONSISTENT);
    CHECK(t.modulus == 12);
    REQUIRE(t.entries.size() == 4);
    auto check_pair = [&](int k, Rational ds, Rational dt) {
        const auto* e = entry_for(t, k);
        REQUIRE(e != nullptr);
        REQUIRE(e->unique());
        CHECK(e->pairs.front() == std::pair<Rational, Rational>{ds, dt});
    };
    check_pair(0, rat(-1, 2), rat(-1, 4));
    check_pair(2, rat(1, 6), rat(1, 4));
    check_pair(4, rat(1, 6), rat(-1, 4));
    check_pair(6, rat(-1, 2), rat(1, 4));
}

TEST_CASE("residue table: trivial S^3 -> S^3 cobordism") {
    auto t = residue_pairing_table(LensSpace::s3(), LensSpace::s3(), -1);
    REQUIRE(t.status == ResiduePairing::Status::CONSISTENT);
    CHECK(t.modulus == 2);
    REQUIRE(t.entries.size() == 1);
    REQUIRE(t.entries.front().unique());
    CHECK(t.entries.front().pairs.front() ==
          std::pair<Rational, Rational>{Rational(0), Rational(0)});
}

TEST_CASE("residue table: L(5,1) -> RP^3 is inconsistent") {
    // exactly the computation excluding +-L(5,1) as the order-5 filling
    auto t = residue_pairing_table(LensSpace(5, 1), LensSpace(2, 1), -10);
    CHECK(t.status == ResiduePairing::Status::INCONSISTENT);
    CHECK_THROWS_AS(residue_pairing_table(LensSpace(5, 1), LensSpace(2, 1), 10),
                    precondition_error);
}

TEST_CASE("parity identity") {
    CHECK(parity_identity_check(2));
    CHECK(parity_identity_check(5));
    for (Int p = 1; p <= 500; ++p) REQUIRE(parity_identity_check(p));
}

TEST_CASE("solve-d: the Prop 4.5 determination") {
    auto sol = solve_d_invariants(LinkingForm::cyclic(2, 3), rat(-1, 6), rat(-1, 2),
                                  LensSpace(3, 2), 3);
    REQUIRE(sol.status == SolveDResult::Status::UNIQUE);
    CHECK(sol.multisets.front() ==
          std::vector<Rational>{rat(-1, 2), rat(1, 6), rat(1, 6)});
}

TEST_CASE("solve-d: RP^3 forced by conjugation and sum") {
    auto sol = solve_d_invariants(LinkingForm::cyclic(1, 2), Rational(0), rat(-1, 4),
                                  LensSpace(2, 1), 2);
    REQUIRE(sol.status == SolveDResult::Status::UNIQUE);
    CHECK(sol.multisets.front() == std::vector<Rational>{rat(-1, 4), rat(1, 4)});
}

TEST_CASE("solve-d: shifted sum moves the answer") {
    auto sol = solve_d_invariants(LinkingForm::cyclic(2, 3), rat(-1, 6) + 2, rat(-1, 2),
                                  LensSpace(3, 2), 1);
    REQUIRE(sol.status == SolveDResult::Status::UNIQUE);
    CHECK(sol.multisets.front() ==
          std::vector<Rational>{rat(1, 6), rat(1, 6), rat(3, 2)});
}

TEST_CASE("solve-d: rejects a mismatched linking form") {
    CHECK_THROWS_AS(solve_d_invariants(LinkingForm::cyclic(1, 3), rat(-1, 6),
                                       rat(-1, 2), LensSpace(3, 2), 2),
                    precondition_error);
}

namespace {

/// Independent enumerator: walks Spin^c indices (not orbits) and imposes
/// the conjugation equality index-wise.
std::vector<std::vector<Rational>> solve_d_oracle(const LensSpace& model,
                                                  const Rational& d_sum,
                                                  const Rational& lower, int radius) {
    DInvariants md = d_invariants(model);
    Int p = model.p();
    std::vector<std::vector<Rational>> results;
    std::vector<Rational> values(static_cast<std::size_t>(p));
    auto rec = [&](auto&& self, Int i) -> void {
        if (i == p) {
            Rational s(0);
            for (const auto& v : values) s += v;
            if (s != d_sum) return;
            std::vector<Rational> sorted = values;
            std::sort(sorted.begin(), sorted.end());
            if (std::find(results.begin(), results.end(), sorted) == results.end())
                results.push_back(sorted);
            return;
        }
        Int c = conjugate_spinc_index(model, i);
        if (c < i) {
            values[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(c)];
            self(self, i + 1);
            return;
        }
        for (int t = 0; t <= radius; ++t) {
            Rational base = md.by_index[static_cast<std::size_t>(i)];
            // shift into the window starting at lower
            Rational steps = (lower - base) / 2;
            Int up = floor_rat(steps);
            if (Rational(up) != steps) ++up;
            Rational v = base + 2 * Rational(up) + 2 * t;
            if (v > lower + 2 * radius) break;
            values[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(results.begin(), results.end());
    return results;
}

}  // namespace

TEST_CASE("solve-d agrees with a brute-force oracle for radius <= 3") {
    std::vector<std::tuple<LensSpace, Rational, Rational>> cases = {
        {LensSpace(3, 2), rat(-1, 6), rat(-1, 2)},
        {LensSpace(3, 2), rat(-1, 6) + 2, rat(-1, 2)},
        {LensSpace(2, 1), Rational(0), rat(-1, 4)},
        {LensSpace(5, 3), Rational(0), rat(-2, 5)},
        {LensSpace(4, 1), rat(1, 2), rat(-1, 4)},
        {LensSpace(7, 2), rat(1, 2), rat(-1, 2)},
    };
    for (const auto& [model, sum, lower] : cases)
        for (int radius = 1; radius <= 3; ++radius) {
            auto sol = solve_d_invariants(LinkingForm::of_lens_space(model), sum, lower,
                                          model, radius);
            auto oracle = solve_d_oracle(model, sum, lower, radius);
            REQUIRE(sol.multisets == oracle);
            // every returned multiset satisfies the stated constraints
            auto model_sorted = d_invariants(model).multiset();
            for (const auto& m : sol.multisets) {
                REQUIRE(Int(m.size()) == model.p());
                Rational s(0);
                for (const auto& v : m) {
                    REQUIRE(v >= lower);
                    s += v;
                }
                REQUIRE(s == sum);
                // multiset matches the model's multiset mod 2
                std::vector<Rational> leftover = model_sorted;
                for (const auto& v : m) {
                    auto it = std::find_if(leftover.begin(), leftover.end(),
                                           [&](const Rational& w) {
                                               return congruent_mod2(v, w);
                                           });
                    REQUIRE(it != leftover.end());
                    leftover.erase(it);
                }
            }
        }
}

TEST_CASE("cobordism signs") {
    // the cobordism from Y_2 to Y_{2 - 1/n} is positive definite
    for (int n = 1; n <= 6; ++n)
        CHECK(cobordism_sign(Slope(2, 1), Slope(2 * n - 1, n)) == +1);
    CHECK(cobordism_sign(Slope(1, 0), Slope(0, 1)) == 0);
    CHECK_THROWS_AS(cobordism_sign(Slope(2, 1), Slope(5, 1)), precondition_error);
}

TEST_CASE("exactly one positive cobordism per triangle") {
    // triangles (x, x+y, y) with the canonical cyclic direction
    // x -> x+y -> y -> x; generated from random SL(2,Z) elements
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coin(0, 1), twist(1, 4);
    int tested = 0;
    while (tested < 200) {
        // random product of elementary matrices applied to (e1, e2)
        long a = 1, b = 0, c = 0, d = 1;
        for (int i = 0; i < 6; ++i) {
            int t = twist(rng) * (coin(rng) ? 1 : -1);
            if (coin(rng)) {
                a += static_cast<long>(t) * b;
                c += static_cast<long>(t) * d;
            } else {
                b += static_cast<long>(t) * a;
                d += static_cast<long>(t) * c;
            }
        }
        // columns x = (a,c), y = (b,d) satisfy det = ad - bc = +-1
        if (a == 0 || b == 0 || a + b == 0) continue;  // skip longitudinal fillings
        Slope x(a, c), y(b, d), z(a + b, c + d);
        int s1 = cobordism_sign(x, z);
        int s2 = cobordism_sign(z, y);
        int s3 = cobordism_sign(y, x);
        int cross_product_sign =
            sign_of(x.mu_coeff() * z.lambda_coeff() - x.lambda_coeff() * z.mu_coeff()) *
            sign_of(z.mu_coeff() * y.lambda_coeff() - z.lambda_coeff() * y.mu_coeff()) *
            sign_of(y.mu_coeff() * x.lambda_coeff() - y.lambda_coeff() * x.mu_coeff());
        if (cross_product_sign != 1) {
            // canonical cyclic direction is the reverse
            s1 = cobordism_sign(z, x);
            s2 = cobordism_sign(y, z);
            s3 = cobordism_sign(x, y);
        }
        REQUIRE(s1 + s2 + s3 == -1);  // two -1 and one +1
        ++tested;
    }
}
