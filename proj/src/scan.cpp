#include "fmc/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fmc/errors.hpp"

namespace fmc {

namespace {

constexpr uint128 kParallelCutoff = 1u << 14;

/// Points with the given x-coordinate, y ascending.
inline void points_at_x(const WeierstrassCurve& E, const FieldContext& F, const FieldElement& x,
                        std::vector<CurvePoint>& out) {
    FieldElement lin = F.add(F.mul(F.from_residue(E.a1()), x), F.from_residue(E.a3()));
    FieldElement x2 = F.mul(x, x);
    FieldElement rhs = F.add(F.add(F.mul(x2, x), F.mul(F.from_residue(E.a2()), x2)),
                             F.add(F.mul(F.from_residue(E.a4()), x), F.from_residue(E.a6())));
    for (const FieldElement& y : F.solve_quadratic(lin, rhs)) {
        CurvePoint P;
        P.ctx = &F;
        P.at_infinity = false;
        P.x = x;
        P.y = y;
        out.push_back(P);
    }
}

const FieldContext& scan_field(const WeierstrassCurve& E, int k) {
    if (k < 1 || k > kmax()) fail(Errc::DegreeTooLarge, "scan degree " + std::to_string(k));
    return field_make(E.p(), k);
}

} // namespace

std::vector<CurvePoint> enumerate_points_serial(const WeierstrassCurve& E, int k) {
    const FieldContext& F = scan_field(E, k);
    std::vector<CurvePoint> out;
    out.push_back(E.infinity(F));
    for (uint128 i = 0; i < F.q(); ++i) points_at_x(E, F, F.from_index(i), out);
    return out;
}

std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& E, int k) {
    const FieldContext& F = scan_field(E, k);
#ifdef _OPENMP
    if (F.q() >= kParallelCutoff && F.q() <= uint128(INT64_MAX)) {
        int64_t q = int64_t(F.q());
        std::vector<std::vector<CurvePoint>> chunks;
#pragma omp parallel
        {
#pragma omp single
            chunks.resize(size_t(omp_get_num_threads()));
            int tid = omp_get_thread_num();
#pragma omp for schedule(static)
            for (int64_t i = 0; i < q; ++i) points_at_x(E, F, F.from_index(uint128(i)), chunks[size_t(tid)]);
        }
        std::vector<CurvePoint> out;
        out.push_back(E.infinity(F));
        // Static schedule hands each thread one ascending contiguous range,
        // so concatenation by thread id preserves canonical order.
        for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
        return out;
    }
#endif
    return enumerate_points_serial(E, k);
}

uint64_t count_killed_by_serial(const WeierstrassCurve& E, int k, uint64_t m) {
    const FieldContext& F = scan_field(E, k);
    uint64_t count = 1; // infinity
    std::vector<CurvePoint> buf;
    for (uint128 i = 0; i < F.q(); ++i) {
        buf.clear();
        points_at_x(E, F, F.from_index(i), buf);
        for (const CurvePoint& P : buf)
            if (E.scalar_mul(int128(m), P).at_infinity) ++count;
    }
    return count;
}

uint64_t count_killed_by(const WeierstrassCurve& E, int k, uint64_t m) {
    const FieldContext& F = scan_field(E, k);
#ifdef _OPENMP
    if (F.q() >= kParallelCutoff && F.q() <= uint128(INT64_MAX)) {
        int64_t q = int64_t(F.q());
        uint64_t count = 1;
#pragma omp parallel
        {
            std::vector<CurvePoint> buf;
#pragma omp for schedule(static) reduction(+ : count)
            for (int64_t i = 0; i < q; ++i) {
                buf.clear();
                points_at_x(E, F, F.from_index(uint128(i)), buf);
                for (const CurvePoint& P : buf)
                    if (E.scalar_mul(int128(m), P).at_infinity) ++count;
            }
        }
        return count;
    }
#endif
    return count_killed_by_serial(E, k, m);
}

std::vector<CurvePoint> collect_killed_by(const WeierstrassCurve& E, int k, uint64_t m) {
    const FieldContext& F = scan_field(E, k);
    std::vector<CurvePoint> out;
    out.push_back(E.infinity(F));
#ifdef _OPENMP
    if (F.q() >= kParallelCutoff && F.q() <= uint128(INT64_MAX)) {
        int64_t q = int64_t(F.q());
        std::vector<std::vector<CurvePoint>> chunks;
#pragma omp parallel
        {
#pragma omp single
            chunks.resize(size_t(omp_get_num_threads()));
            int tid = omp_get_thread_num();
            std::vector<CurvePoint> buf;
#pragma omp for schedule(static)
            for (int64_t i = 0; i < q; ++i) {
                buf.clear();
                points_at_x(E, F, F.from_index(uint128(i)), buf);
                for (const CurvePoint& P : buf)
                    if (E.scalar_mul(int128(m), P).at_infinity) chunks[size_t(tid)].push_back(P);
            }
        }
        for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
        return out;
    }
#endif
    std::vector<CurvePoint> buf;
    for (uint128 i = 0; i < F.q(); ++i) {
        buf.clear();
        points_at_x(E, F, F.from_index(i), buf);
        for (const CurvePoint& P : buf)
            if (E.scalar_mul(int128(m), P).at_infinity) out.push_back(P);
    }
    return out;
}

} // namespace fmc
