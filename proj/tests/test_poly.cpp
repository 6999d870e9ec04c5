#include <doctest.h>

#include "fmc/field.hpp"
#include "fmc/poly.hpp"

using namespace fmc;

TEST_CASE("polynomial roots, spec examples") {
    const FieldContext& f5 = field_make(5, 1);
    Poly f = poly_from_residues(f5, {1, 0, 1}); // x^2 + 1
    auto roots = poly_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == f5.from_residue(2));
    CHECK(roots[1] == f5.from_residue(3));

    const FieldContext& f7 = field_make(7, 1);
    CHECK(poly_roots(poly_from_residues(f7, {1, 0, 1})).empty()); // -1 is a non-residue mod 7

    auto cubes = poly_roots(poly_from_residues(f7, {-1, 0, 0, 1})); // x^3 - 1
    REQUIRE(cubes.size() == 3);
    CHECK(cubes[0] == f7.from_residue(1));
    CHECK(cubes[1] == f7.from_residue(2));
    CHECK(cubes[2] == f7.from_residue(4));
}

TEST_CASE("serial and parallel root scans agree") {
    const FieldContext& F = field_make(7, 5); // 16807 elements, above the parallel cutoff
    Poly f = poly_from_residues(F, {3, 1, 0, 2, 1});
    auto a = poly_roots_serial(f);
    auto b = poly_roots(f);
    CHECK(a == b);
}

TEST_CASE("randomized splitting matches the scan") {
    for (auto [p, k] : std::vector<std::pair<int64_t, int>>{{5, 2}, {7, 2}, {2, 4}, {3, 3}, {13, 2}}) {
        const FieldContext& F = field_make(p, k);
        Rng rng(uint64_t(p * 31 + k));
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<FieldElement> coeffs;
            int deg = 1 + int(rng.below(5));
            for (int i = 0; i < deg; ++i) coeffs.push_back(F.from_index(rng.below128(F.q())));
            coeffs.push_back(F.one()); // monic
            Poly f = poly_make(F, coeffs);
            CHECK(poly_roots_cz(f) == poly_roots_serial(f));
        }
    }
}

TEST_CASE("irreducibility test against trial factorization") {
    const FieldContext& f3 = field_make(3, 1);
    // x^2 + 1 irreducible over F_3; x^2 + 2 = (x+1)(x+2) is not.
    CHECK(poly_is_irreducible(poly_from_residues(f3, {1, 0, 1})));
    CHECK_FALSE(poly_is_irreducible(poly_from_residues(f3, {2, 0, 1})));
    // brute: count monic irreducible quartics over F_2 (there are 3)
    const FieldContext& f2 = field_make(2, 1);
    int count = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int64_t> c = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1, 1};
        Poly f = poly_from_residues(f2, c);
        bool has_factor = false;
        // trial division by monic linears and quadratics
        for (int a0 = 0; a0 < 2 && !has_factor; ++a0) {
            Poly lin = poly_from_residues(f2, {a0, 1});
            if (poly_mod(f, lin).is_zero()) has_factor = true;
        }
        for (int a0 = 0; a0 < 2 && !has_factor; ++a0)
            for (int a1 = 0; a1 < 2 && !has_factor; ++a1) {
                Poly q = poly_from_residues(f2, {a0, a1, 1});
                if (poly_mod(f, q).is_zero()) has_factor = true;
            }
        bool irr = poly_is_irreducible(f);
        CHECK(irr == !has_factor);
        if (irr) ++count;
    }
    CHECK(count == 3);
}

TEST_CASE("poly arithmetic sanity") {
    const FieldContext& F = field_make(5, 1);
    Poly a = poly_from_residues(F, {1, 2, 3});
    Poly b = poly_from_residues(F, {4, 1});
    Poly prod = poly_mul(a, b);
    CHECK(prod.degree() == 3);
    CHECK(poly_mod(prod, b).is_zero());
    CHECK(poly_gcd(prod, b).degree() == 1);
    FieldElement x = F.from_residue(2);
    CHECK(poly_eval(prod, x) == F.mul(poly_eval(a, x), poly_eval(b, x)));
}
