#include <doctest.h>

#include "fmc/scan.hpp"

using namespace fmc;

TEST_CASE("parallel kernels reproduce the serial reference") {
    WeierstrassCurve E(5, 0, 0, 0, 1, 1);
    for (int k : {1, 2, 6, 7}) { // degrees 6 and 7 cross the parallel cutoff
        auto a = enumerate_points_serial(E, k);
        auto b = enumerate_points(E, k);
        CHECK(a == b);
        CHECK(count_killed_by_serial(E, k, 6) == count_killed_by(E, k, 6));
    }
    WeierstrassCurve E2(2, 0, 0, 1, 0, 0);
    for (int k : {1, 4, 9}) {
        CHECK(enumerate_points_serial(E2, k) == enumerate_points(E2, k));
        CHECK(count_killed_by_serial(E2, k, 3) == count_killed_by(E2, k, 3));
    }
}

TEST_CASE("enumeration output is canonically ordered and on-curve") {
    WeierstrassCurve E(7, 0, 0, 0, 0, 1);
    auto pts = enumerate_points(E, 2);
    CHECK(pts.size() == E.group_order(2));
    CHECK(pts.front().at_infinity);
    for (size_t i = 1; i < pts.size(); ++i) {
        CHECK(E.contains(pts[i].x, pts[i].y));
        if (i >= 2) CHECK(pts[i - 1] < pts[i]);
    }
}

TEST_CASE("collect_killed_by returns exactly the m-torsion points") {
    WeierstrassCurve E(5, 0, 0, 0, 1, 0); // full 2-torsion rational over F_5
    auto killed = collect_killed_by(E, 1, 2);
    CHECK(killed.size() == 4);
    for (const CurvePoint& P : killed) CHECK(E.scalar_mul(2, P).at_infinity);
    // degree errors surface
    CHECK_THROWS(enumerate_points(E, kDegreeCap + 1));
}
