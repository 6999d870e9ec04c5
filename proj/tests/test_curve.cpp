#include <doctest.h>

#include <cmath>

#include "fmc/curve.hpp"
#include "fmc/errors.hpp"
#include "fmc/scan.hpp"

using namespace fmc;

TEST_CASE("construction, j-invariants, singular rejection") {
    WeierstrassCurve e1(5, 0, 0, 0, 1, 0); // y^2 = x^3 + x
    CHECK(e1.j() == 1728 % 5);             // a6 = 0 forces c6 = 0
    WeierstrassCurve e2(5, 0, 0, 0, 0, 1); // y^2 = x^3 + 1
    CHECK(e2.j() == 0);                    // a4 = 0 forces c4 = 0
    CHECK_THROWS_AS(WeierstrassCurve(5, 0, 0, 0, 0, 0), Error);

    // standard relations 4 b8 = b2 b6 - b4^2 and 1728 disc = c4^3 - c6^2
    for (const WeierstrassCurve& E : {e1, e2, WeierstrassCurve(7, 1, 2, 3, 4, 5)}) {
        int64_t p = E.p();
        CHECK((4 * E.b8()) % p == ((E.b2() * E.b6() - E.b4() * E.b4()) % p + p) % p);
        int64_t lhs = (1728 % p) * E.disc() % p;
        int64_t rhs = ((E.c4() * E.c4() % p * E.c4() - E.c6() * E.c6()) % p + p) % p;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("group law: identity, corrected doubling values, orders") {
    WeierstrassCurve E(5, 0, 0, 0, 0, 1); // y^2 = x^3 + 1, 6 points over F_5
    const FieldContext& F = field_make(5, 1);
    CurvePoint O = E.infinity(F);
    CurvePoint P = E.point(F.from_residue(0), F.from_residue(1));
    CHECK(E.add(P, O) == P);
    // Doubling (0,1): lambda = 0, so 2P = (0,-1). The tangent at (0,1) is
    // horizontal; exhaustive evaluation of the group law confirms it.
    CurvePoint twoP = E.add(P, P);
    CHECK(twoP == E.point(F.from_residue(0), F.from_residue(4)));
    CHECK(E.point_order(P) == 3);
    CHECK(E.scalar_mul(6, P).at_infinity); // 3P = O implies 6P = O
    // The full group is cyclic of order 6, generated by (2, 2).
    CurvePoint G = E.point(F.from_residue(2), F.from_residue(2));
    CHECK(E.point_order(G) == 6);
    CHECK(enumerate_points(E, 1).size() == 6);

    WeierstrassCurve Ex(5, 0, 0, 0, 1, 0); // y^2 = x^3 + x
    CurvePoint T = Ex.point(F.from_residue(0), F.from_residue(0));
    CHECK(Ex.add(T, T).at_infinity); // 2-torsion: y = 0 with a1 = a3 = 0
    CHECK(Ex.point_order(T) == 2);
    CHECK(Ex.scalar_mul(0, T).at_infinity);
    auto pts = enumerate_points(Ex, 1);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].at_infinity);
    CHECK(pts[1] == Ex.point(F.from_residue(0), F.from_residue(0)));
    CHECK(pts[2] == Ex.point(F.from_residue(2), F.from_residue(0)));
    CHECK(pts[3] == Ex.point(F.from_residue(3), F.from_residue(0)));
}

TEST_CASE("negation and negative scalars") {
    WeierstrassCurve E(7, 1, 2, 3, 4, 5);
    const FieldContext& F = field_make(7, 1);
    Rng rng(11);
    CurvePoint P = E.random_point(F, rng);
    CHECK(E.add(P, E.negate(P)).at_infinity);
    CHECK(E.scalar_mul(-3, P) == E.negate(E.scalar_mul(3, P)));
}

TEST_CASE("group-law axioms on random triples") {
    for (auto coeffs : std::vector<std::array<int64_t, 6>>{
             {5, 0, 0, 0, 1, 1}, {2, 0, 0, 1, 0, 0}, {2, 1, 0, 0, 0, 1}, {3, 0, 0, 0, 2, 0},
             {7, 1, 2, 3, 4, 5}, {13, 0, 0, 0, 1, 0}}) {
        WeierstrassCurve E(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], coeffs[5]);
        const FieldContext& F = field_make(E.p(), 2);
        Rng rng(uint64_t(coeffs[0] * 1000 + coeffs[5]));
        for (int i = 0; i < 1000; ++i) {
            CurvePoint P = E.random_point(F, rng);
            CurvePoint Q = E.random_point(F, rng);
            CurvePoint R = E.random_point(F, rng);
            CHECK(E.add(P, Q) == E.add(Q, P));
            CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
            CurvePoint S = E.add(P, Q);
            if (!S.at_infinity) CHECK(E.contains(S.x, S.y));
        }
    }
}

TEST_CASE("Hasse bound and Lagrange over extensions") {
    for (int64_t p : {2, 3, 5, 7, 11, 13, 97}) {
        for (int64_t a6 = 0; a6 < std::min<int64_t>(p, 6); ++a6) {
            WeierstrassCurve* E = nullptr;
            try {
                E = new WeierstrassCurve(p, 0, 0, p < 5 ? 1 : 0, 1, a6);
            } catch (const Error&) {
                continue;
            }
            double bound = 2.0 * std::sqrt(double(p));
            CHECK(std::abs(double(E->trace())) <= bound + 1e-9);
            delete E;
        }
    }
    // Lagrange: point order divides the group order over each degree.
    WeierstrassCurve E(5, 0, 0, 0, 1, 1);
    for (int k = 1; k <= 3; ++k) {
        uint128 N = E.group_order(k);
        for (const CurvePoint& P : enumerate_points(E, k)) CHECK(N % E.point_order(P) == 0);
    }
}

TEST_CASE("trace recurrence matches exhaustive extension counts") {
    for (auto coeffs : std::vector<std::array<int64_t, 6>>{
             {5, 0, 0, 0, 0, 1}, {5, 0, 0, 0, 1, 0}, {5, 0, 0, 0, 1, 1},
             {2, 0, 0, 1, 0, 0}, {2, 1, 0, 0, 0, 1}, {3, 0, 0, 0, 2, 0}, {7, 0, 0, 0, 0, 1}}) {
        WeierstrassCurve E(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], coeffs[5]);
        for (int k = 1; k <= 3; ++k)
            CHECK(E.group_order(k) == uint128(enumerate_points(E, k).size()));
    }
}

TEST_CASE("supersingularity via trace") {
    CHECK(WeierstrassCurve(5, 0, 0, 0, 0, 1).is_supersingular());       // count 6, t = 0
    CHECK_FALSE(WeierstrassCurve(5, 0, 0, 0, 1, 0).is_supersingular()); // count 4, t = 2
    CHECK(WeierstrassCurve(2, 0, 0, 1, 0, 0).is_supersingular());       // y^2 + y = x^3
    CHECK(WeierstrassCurve(3, 0, 0, 0, 2, 0).is_supersingular());       // y^2 = x^3 - x
    CHECK_FALSE(WeierstrassCurve(2, 1, 0, 0, 0, 1).is_supersingular());
}

TEST_CASE("points off the curve are rejected") {
    WeierstrassCurve E(5, 0, 0, 0, 0, 1);
    const FieldContext& F = field_make(5, 1);
    CHECK_THROWS_AS(E.point(F.from_residue(4), F.from_residue(4)), Error);
}

TEST_CASE("j is invariant under admissible coordinate changes") {
    WeierstrassCurve E(7, 1, 2, 3, 4, 5);
    const FieldContext& F = field_make(7, 1);
    Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        FieldElement u = F.from_index(1 + rng.below128(F.q() - 1));
        FieldElement r = F.from_index(rng.below128(F.q()));
        FieldElement s = F.from_index(rng.below128(F.q()));
        FieldElement t = F.from_index(rng.below128(F.q()));
        auto na = transform_coefficients(E, u, r, s, t);
        WeierstrassCurve E2(7, na[0].c[0], na[1].c[0], na[2].c[0], na[3].c[0], na[4].c[0]);
        CHECK(E2.j() == E.j());
    }
}
