#include "fmc/torsion.hpp"

#include <algorithm>
#include <optional>

#include "fmc/errors.hpp"
#include "fmc/scan.hpp"

namespace fmc {

namespace detail {
uint128 torsion_scan_limit = 600000;
}

const char* torsion_structure_name(TorsionStructure s) {
    switch (s) {
    case TorsionStructure::Rank2: return "rank2";
    case TorsionStructure::CyclicP: return "cyclic_p";
    case TorsionStructure::Trivial: return "trivial";
    case TorsionStructure::Mixed: return "mixed";
    }
    return "?";
}

uint64_t order_dividing(const WeierstrassCurve& E, const CurvePoint& P, uint64_t bound) {
    for (uint64_t d = 1; d <= bound; ++d) {
        if (bound % d != 0) continue;
        if (E.scalar_mul(int128(d), P).at_infinity) return d;
    }
    fail(Errc::Internal, "point order does not divide the stated bound");
}

namespace {

constexpr int kSampleCap = 256;

uint64_t instance_seed(const WeierstrassCurve& E, uint64_t m, int k, uint64_t salt) {
    uint64_t s = 0x9d2c5680u;
    for (int64_t v : {E.p(), E.a1(), E.a2(), E.a3(), E.a4(), E.a6(), int64_t(m), int64_t(k),
                      int64_t(salt)}) {
        s ^= uint64_t(v) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    }
    return s;
}

struct PointSet {
    std::vector<CurvePoint> pts; // sorted
    bool contains(const CurvePoint& P) const {
        return std::binary_search(pts.begin(), pts.end(), P);
    }
};

PointSet cyclic_span(const WeierstrassCurve& E, const CurvePoint& g, uint64_t ord) {
    PointSet s;
    CurvePoint cur = E.infinity(*g.ctx);
    for (uint64_t i = 0; i < ord; ++i) {
        s.pts.push_back(cur);
        cur = E.add(cur, g);
    }
    std::sort(s.pts.begin(), s.pts.end());
    return s;
}

/// span{ i A + j B : 0 <= i < na, 0 <= j < nb }, sorted; fails Internal if the
/// span is smaller than na * nb (dependence certificate).
std::vector<CurvePoint> materialize_span(const WeierstrassCurve& E, const CurvePoint& A,
                                         uint64_t na, const CurvePoint& B, uint64_t nb) {
    std::vector<CurvePoint> out;
    out.reserve(size_t(na * nb));
    CurvePoint rowStart = E.infinity(*A.ctx);
    for (uint64_t i = 0; i < na; ++i) {
        CurvePoint cur = rowStart;
        for (uint64_t j = 0; j < nb; ++j) {
            out.push_back(cur);
            cur = E.add(cur, B);
        }
        rowStart = E.add(rowStart, A);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        fail(Errc::Internal, "torsion basis points are not independent");
    return out;
}

/// Canonical rank-2 basis from the full set of n-torsion points:
/// first point of maximal order in canonical order, then the first point of
/// maximal order generating trivially-intersecting cyclic subgroups.
std::pair<CurvePoint, CurvePoint> canonical_pair(const WeierstrassCurve& E,
                                                 const std::vector<CurvePoint>& sorted_pts,
                                                 uint64_t n) {
    const CurvePoint* first = nullptr;
    for (const CurvePoint& P : sorted_pts) {
        if (order_dividing(E, P, n) == n) {
            first = &P;
            break;
        }
    }
    if (!first) fail(Errc::Internal, "no point of full order in torsion set");
    PointSet span1 = cyclic_span(E, *first, n);
    for (const CurvePoint& P : sorted_pts) {
        if (order_dividing(E, P, n) != n) continue;
        bool independent = true;
        CurvePoint cur = P;
        for (uint64_t j = 1; j < n && independent; ++j) {
            if (!cur.at_infinity && span1.contains(cur)) independent = false;
            cur = E.add(cur, P);
        }
        if (independent) return {*first, P};
    }
    fail(Errc::Internal, "no independent second basis point in torsion set");
}

/// Canonical generator of a cyclic torsion part from its full point set.
CurvePoint canonical_generator(const WeierstrassCurve& E,
                               const std::vector<CurvePoint>& sorted_pts, uint64_t ord) {
    for (const CurvePoint& P : sorted_pts)
        if (order_dividing(E, P, ord) == ord) return P;
    fail(Errc::Internal, "no generator of stated order in torsion set");
}

/// ell-order exponent of P: least b with ell^b P = O. Requires ord(P) = ell^b.
int ell_exponent(const WeierstrassCurve& E, CurvePoint P, uint128 ell) {
    int b = 0;
    while (!P.at_infinity) {
        P = E.scalar_mul(int128(ell), P);
        ++b;
        if (b > 127) fail(Errc::Internal, "runaway ell-exponent");
    }
    return b;
}

/// Tries to build a basis of E[ell^e] inside E(F_q) by cofactor sampling.
/// Returns points on success; nullopt is a *certified* failure (a sampled
/// point of ell-order past ell^(a-e) proves the rational ell^e-torsion has
/// rank < 2). Inconclusive sampling raises Internal instead of guessing.
std::optional<std::pair<CurvePoint, CurvePoint>> sample_rank2_part(const WeierstrassCurve& E,
                                                                   const FieldContext& F,
                                                                   uint128 N, uint64_t ell,
                                                                   int e, Rng& rng) {
    int a = valuation(N, ell);
    uint128 cofactor = N;
    for (int i = 0; i < a; ++i) cofactor /= ell;
    uint128 elle = 1;
    for (int i = 0; i < e; ++i) elle *= ell;

    std::optional<CurvePoint> first;
    PointSet span1;
    for (int trial = 0; trial < kSampleCap; ++trial) {
        CurvePoint R = E.scalar_mul(int128(cofactor), E.random_point(F, rng));
        int b = ell_exponent(E, R, ell);
        if (b > a - e) return std::nullopt; // rank-2 containment impossible at this degree
        if (b < e) continue;
        CurvePoint C = R;
        for (int i = 0; i < b - e; ++i) C = E.scalar_mul(int128(ell), C);
        // C now has order ell^e
        if (!first) {
            first = C;
            span1 = cyclic_span(E, C, uint64_t(elle));
            continue;
        }
        // Independence at level ell: the ell^(e-1) multiples must generate
        // distinct order-ell subgroups.
        CurvePoint lowC = C, lowF = *first;
        for (int i = 0; i < e - 1; ++i) {
            lowC = E.scalar_mul(int128(ell), lowC);
            lowF = E.scalar_mul(int128(ell), lowF);
        }
        bool indep = true;
        CurvePoint cur = lowC;
        for (uint64_t i = 1; i < ell && indep; ++i) {
            if (cur == lowF) indep = false;
            cur = E.add(cur, lowC);
        }
        if (cur == lowF) indep = false;
        if (indep) return std::make_pair(*first, C);
    }
    fail(Errc::Internal, "torsion sampling inconclusive for ell=" + std::to_string(ell));
}

/// Basis of E[n] over F_q (p coprime to n), or nullopt if E[n] is not fully
/// rational there. Certified in both directions.
std::optional<std::pair<CurvePoint, CurvePoint>> build_rank2_basis(const WeierstrassCurve& E,
                                                                   const FieldContext& F,
                                                                   uint128 N, uint64_t n,
                                                                   uint64_t m_for_seed) {
    std::vector<uint128> fac = factorize(n);
    CurvePoint A = E.infinity(F), B = E.infinity(F);
    for (size_t i = 0; i < fac.size();) {
        uint64_t ell = uint64_t(fac[i]);
        int e = 0;
        while (i < fac.size() && fac[i] == uint128(ell)) {
            ++e;
            ++i;
        }
        Rng rng(instance_seed(E, m_for_seed, F.k(), ell));
        auto part = sample_rank2_part(E, F, N, ell, e, rng);
        if (!part) return std::nullopt;
        A = E.add(A, part->first);
        B = E.add(B, part->second);
    }
    return std::make_pair(A, B);
}

/// Generator of the cyclic rational p-power torsion Z/p^e. The caller has
/// already checked p^e | N, which is sufficient for containment because the
/// geometric p^e-torsion of an ordinary curve is itself cyclic.
CurvePoint sample_p_part(const WeierstrassCurve& E, const FieldContext& F, uint128 N, int e,
                         uint64_t m_for_seed) {
    uint64_t p = uint64_t(E.p());
    int a = valuation(N, p);
    uint128 cofactor = N;
    for (int i = 0; i < a; ++i) cofactor /= p;
    Rng rng(instance_seed(E, m_for_seed, F.k(), p));
    for (int trial = 0; trial < kSampleCap; ++trial) {
        CurvePoint R = E.scalar_mul(int128(cofactor), E.random_point(F, rng));
        int b = ell_exponent(E, R, p);
        if (b < e) continue;
        CurvePoint g = R;
        for (int i = 0; i < b - e; ++i) g = E.scalar_mul(int128(p), g);
        return g;
    }
    fail(Errc::Internal, "p-part sampling inconclusive");
}

uint128 pow_u128(uint128 b, int e) {
    uint128 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

TorsionData torsion_subgroup(const WeierstrassCurve& E, uint64_t m) {
    if (m < 1) fail(Errc::OrderTooSmall, "torsion order must be >= 1");
    if (m > kOrderCap) fail(Errc::DegreeTooLarge, "m exceeds M_MAX = " + std::to_string(kOrderCap));
    const uint64_t p = uint64_t(E.p());

    TorsionData td;
    td.m = m;
    if (m == 1) {
        const FieldContext& F = field_make(E.p(), 1);
        td.structure = TorsionStructure::Rank2;
        td.field_degree = 1;
        td.all_points = {E.infinity(F)};
        return td;
    }

    int e = 0;
    uint64_t n = m;
    while (n % p == 0) {
        n /= p;
        ++e;
    }

    if (E.is_supersingular() && e > 0) {
        if (n > 1)
            fail(Errc::UnsupportedMixedOrder,
                 "supersingular curve has trivial p-power torsion; no point of order " +
                     std::to_string(m));
        const FieldContext& F = field_make(E.p(), 1);
        td.structure = TorsionStructure::Trivial;
        td.field_degree = 1;
        td.all_points = {E.infinity(F)};
        return td;
    }

    // Prime-to-p part: least k with E[n] rational over F_{p^k}.
    int k_n = 0;
    CurvePoint A, B;
    std::vector<CurvePoint> n_set;
    if (n > 1) {
        uint128 n2 = uint128(n) * n;
        for (int k = 1; k <= kmax(); ++k) {
            uint128 N = E.group_order(k);
            if (N % n2 != 0) continue;
            uint128 pk1 = pow_u128(uint128(p), k) - 1; // Weil pairing needs mu_n in F_q
            if (pk1 % n != 0) continue;
            const FieldContext& F = field_make(E.p(), k);
            if (F.q() <= detail::torsion_scan_limit) {
                std::vector<CurvePoint> pts = collect_killed_by(E, k, n);
                if (pts.size() == size_t(n2)) {
                    n_set = std::move(pts);
                    auto pair = canonical_pair(E, n_set, n);
                    A = pair.first;
                    B = pair.second;
                    k_n = k;
                    break;
                }
            } else {
                auto basis = build_rank2_basis(E, F, N, n, m);
                if (basis) {
                    n_set = materialize_span(E, basis->first, n, basis->second, n);
                    auto pair = canonical_pair(E, n_set, n);
                    A = pair.first;
                    B = pair.second;
                    k_n = k;
                    break;
                }
            }
        }
        if (k_n == 0)
            fail(Errc::NotFoundWithinTower,
                 "E[" + std::to_string(n) + "] not rational within degree " +
                     std::to_string(kmax()) + " for " + E.label());
    }

    // p-power part on an ordinary curve: cyclic of order p^e.
    int k_p = 0;
    CurvePoint G;
    std::vector<CurvePoint> p_set;
    if (e > 0) {
        uint128 pe = pow_u128(uint128(p), e);
        for (int k = 1; k <= kmax(); ++k) {
            uint128 N = E.group_order(k);
            if (N % pe != 0) continue;
            const FieldContext& F = field_make(E.p(), k);
            CurvePoint g;
            if (F.q() <= detail::torsion_scan_limit) {
                std::vector<CurvePoint> pts = collect_killed_by(E, k, uint64_t(pe));
                if (pts.size() != size_t(pe))
                    fail(Errc::Internal, "ordinary p-torsion count mismatch");
                p_set = std::move(pts);
                g = canonical_generator(E, p_set, uint64_t(pe));
            } else {
                g = sample_p_part(E, F, N, e, m);
                p_set = cyclic_span(E, g, uint64_t(pe)).pts;
                g = canonical_generator(E, p_set, uint64_t(pe));
            }
            G = g;
            k_p = k;
            break;
        }
        if (k_p == 0)
            fail(Errc::NotFoundWithinTower,
                 "E[p^" + std::to_string(e) + "] not rational within degree " +
                     std::to_string(kmax()) + " for " + E.label());
    }

    if (e == 0) {
        td.structure = TorsionStructure::Rank2;
        td.field_degree = k_n;
        td.basis = {A, B};
        td.all_points = std::move(n_set);
        return td;
    }
    if (n == 1) {
        td.structure = TorsionStructure::CyclicP;
        td.field_degree = k_p;
        td.basis = {G};
        td.all_points = std::move(p_set);
        return td;
    }

    // Mixed m = p^e n: combine parts in the compositum field.
    uint64_t k_tor = uint64_t(lcm128(uint128(k_n), uint128(k_p)));
    if (k_tor > uint64_t(kmax()))
        fail(Errc::NotFoundWithinTower,
             "E[" + std::to_string(m) + "] needs degree " + std::to_string(k_tor) + " > " +
                 std::to_string(kmax()));
    const FieldContext& C = field_make(E.p(), int(k_tor));
    auto lift_point = [&](const CurvePoint& P) {
        if (P.at_infinity) return E.infinity(C);
        return E.point(lift(P.x, C), lift(P.y, C));
    };
    CurvePoint P1 = E.add(lift_point(G), lift_point(A));
    CurvePoint P2 = lift_point(B);
    td.structure = TorsionStructure::Mixed;
    td.field_degree = int(k_tor);
    td.basis = {P1, P2};
    td.all_points = materialize_span(E, P1, m, P2, n);
    return td;
}

} // namespace fmc
