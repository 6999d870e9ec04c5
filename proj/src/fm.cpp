#include "fmc/fm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "fmc/errors.hpp"
#include "fmc/torsion.hpp"

namespace fmc {

UnitGroup unit_group(uint64_t m) {
    UnitGroup g;
    g.m = m;
    if (m <= 1) {
        g.elements = {0};
        g.phi = 1;
        return g;
    }
    for (uint64_t i = 1; i < m; ++i)
        if (std::gcd(i, m) == 1) g.elements.push_back(i);
    g.phi = g.elements.size();
    return g;
}

namespace {

/// Multiples 0*a, 1*a, ..., (m-1)*a over a's field.
std::vector<CurvePoint> multiples_of(const WeierstrassCurve& E, const CurvePoint& a, uint64_t m) {
    std::vector<CurvePoint> mult;
    mult.reserve(m);
    CurvePoint cur = E.infinity(*a.ctx);
    for (uint64_t i = 0; i < m; ++i) {
        mult.push_back(cur);
        cur = E.add(cur, a);
    }
    return mult;
}

/// Index i with P == i*a, or nullopt when P is outside <a>.
std::optional<uint64_t> dlog_in(const WeierstrassCurve& E, const std::vector<CurvePoint>& mult,
                                const CurvePoint& P) {
    for (uint64_t i = 0; i < mult.size(); ++i) {
        CurvePoint m = mult[i];
        if (m.ctx != P.ctx) {
            if (m.at_infinity)
                m = E.infinity(*P.ctx);
            else
                m = E.point(lift(m.x, *P.ctx), lift(m.y, *P.ctx));
        }
        if (m == P) return i;
    }
    return std::nullopt;
}

} // namespace

HSubgroup h_group(const WeierstrassCurve& E, const CurvePoint& a) {
    return h_group(E, a, automorphism_group(E));
}

HSubgroup h_group(const WeierstrassCurve& E, const CurvePoint& a, const AutGroup& aut) {
    uint128 ord = E.point_order(a);
    if (ord < 2) fail(Errc::OrderTooSmall, "h_group needs ord(a) >= 2");
    if (ord > kOrderCap) fail(Errc::DegreeTooLarge, "ord(a) exceeds M_MAX");
    uint64_t m = uint64_t(ord);

    uint64_t kc = uint64_t(lcm128(uint128(a.ctx->k()), uint128(aut.ctx->k())));
    if (kc > uint64_t(kmax()))
        fail(Errc::NotFoundWithinTower, "compositum for H-subgroup exceeds the tower");
    const FieldContext& C = field_make(E.p(), int(kc));
    CurvePoint ac = a.at_infinity ? E.infinity(C) : E.point(lift(a.x, C), lift(a.y, C));
    std::vector<CurvePoint> mult = multiples_of(E, ac, m);

    HSubgroup h;
    h.m = m;
    for (const Automorphism& phi : aut.elements) {
        CurvePoint img = apply_automorphism(E, phi, ac);
        std::optional<uint64_t> i = dlog_in(E, mult, img);
        if (!i) continue; // phi moves a outside <a>
        if (std::gcd(*i, m) != 1)
            fail(Errc::Internal, "automorphism image has wrong order in <a>");
        if (!h.witness.count(*i)) {
            h.members.push_back(*i);
            h.witness.emplace(*i, phi);
        }
    }
    std::sort(h.members.begin(), h.members.end());

    // H must be a subgroup containing +-1 (a theorem; violation = bug).
    auto has = [&](uint64_t v) {
        return std::binary_search(h.members.begin(), h.members.end(), v % m);
    };
    if (!has(1) || !has(m - 1)) fail(Errc::Internal, "H-subgroup misses +-1");
    for (uint64_t x : h.members)
        for (uint64_t y : h.members)
            if (!has(x * y % m)) fail(Errc::Internal, "H-subgroup not closed");
    if (m >= 4) {
        size_t sz = h.members.size();
        if (sz != 2 && sz != 4 && sz != 6) fail(Errc::Internal, "|H| outside {2,4,6}");
    }
    return h;
}

PartnerReport fm_partners(const WeierstrassCurve& E, const CurvePoint& a, bool with_oracle) {
    return fm_partners(E, a, automorphism_group(E), with_oracle);
}

PartnerReport fm_partners(const WeierstrassCurve& E, const CurvePoint& a, const AutGroup& aut,
                          bool with_oracle) {
    PartnerReport rep;
    rep.h = h_group(E, a, aut);
    rep.m = rep.h.m;
    UnitGroup units = unit_group(rep.m);

    for (uint64_t u : units.elements) {
        bool covered = false;
        for (uint64_t s : rep.representatives) {
            for (uint64_t hmem : rep.h.members) {
                if (s * hmem % rep.m == u) {
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        // Units ascend, so a fresh coset is met at its least element first.
        if (!covered) rep.representatives.push_back(u);
    }
    rep.count = units.phi / rep.h.members.size();
    if (rep.count * rep.h.members.size() != units.phi)
        fail(Errc::Internal, "|H| does not divide phi(m)");
    if (rep.representatives.size() != rep.count)
        fail(Errc::Internal, "coset representative count mismatch");
    rep.bound_ok = rep.m < 3 || 2 * rep.count <= units.phi;
    if (with_oracle) {
        rep.oracle_count = fm_oracle(E, a, aut);
        if (*rep.oracle_count != rep.count)
            fail(Errc::Internal, "oracle count disagrees with phi(m)/|H|");
    }
    return rep;
}

uint64_t fm_oracle(const WeierstrassCurve& E, const CurvePoint& a) {
    return fm_oracle(E, a, automorphism_group(E));
}

uint64_t fm_oracle(const WeierstrassCurve& E, const CurvePoint& a, const AutGroup& aut) {
    uint128 ord = E.point_order(a);
    if (ord < 2) fail(Errc::OrderTooSmall, "fm_oracle needs ord(a) >= 2");
    if (ord > kOrderCap) fail(Errc::DegreeTooLarge, "ord(a) exceeds M_MAX");
    uint64_t m = uint64_t(ord);
    uint64_t kc = uint64_t(lcm128(uint128(a.ctx->k()), uint128(aut.ctx->k())));
    if (kc > uint64_t(kmax()))
        fail(Errc::NotFoundWithinTower, "compositum for the oracle exceeds the tower");
    const FieldContext& C = field_make(E.p(), int(kc));
    CurvePoint ac = a.at_infinity ? E.infinity(C) : E.point(lift(a.x, C), lift(a.y, C));
    std::vector<CurvePoint> mult = multiples_of(E, ac, m);
    UnitGroup units = unit_group(m);

    // Union-find over the unit residues.
    std::map<uint64_t, uint64_t> parent;
    for (uint64_t u : units.elements) parent[u] = u;
    std::function<uint64_t(uint64_t)> find = [&](uint64_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (uint64_t i : units.elements) {
        for (const Automorphism& phi : aut.elements) {
            CurvePoint img = apply_automorphism(E, phi, mult[i]);
            std::optional<uint64_t> j = dlog_in(E, mult, img);
            if (!j) continue;
            uint64_t ri = find(i), rj = find(*j);
            if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }
    }
    uint64_t classes = 0;
    for (uint64_t u : units.elements)
        if (find(u) == u) ++classes;
    return classes;
}

// ---------------------------------------------------------------------------
// Theorem-table rows

namespace {
FiberEntry tame(uint64_t mult) { return {mult, std::nullopt, false}; }
FiberEntry wild(uint64_t mult, int64_t a) { return {mult, a, true}; }
} // namespace

FiberRow fiber_table(const SurfaceDescriptor& d) {
    if (d.e != 0 && d.e != -1) fail(Errc::InconsistentDescriptor, "e must be 0 or -1");
    if (d.p < 0) fail(Errc::InconsistentDescriptor, "characteristic must be >= 0");
    FiberRow row;
    if (d.e == 0) {
        switch (d.bundle) {
        case BundleKind::TrivialSum:
            row.note = "(i-1)";
            row.has_elliptic_fibration = true;
            return row;
        case BundleKind::LineSum:
            if (d.ord_m < 2) fail(Errc::InconsistentDescriptor, "line_sum needs ord >= 2");
            row.note = "(i-2)";
            row.has_elliptic_fibration = true;
            row.entries = {tame(d.ord_m), tame(d.ord_m)};
            return row;
        case BundleKind::LineSumInfinite:
            row.note = "(i-3)";
            row.has_elliptic_fibration = false;
            return row;
        case BundleKind::Indecomposable:
            if (d.p == 0) {
                row.note = "(i-4)";
                row.has_elliptic_fibration = false;
                return row;
            }
            row.note = "(i-5)";
            row.has_elliptic_fibration = true;
            row.entries = {wild(uint64_t(d.p), d.p - 2)};
            return row;
        }
        fail(Errc::InconsistentDescriptor, "unknown bundle kind");
    }
    // e = -1: always fibered; the bundle kind carries no further data here.
    if (d.p != 2) {
        row.note = "(ii-1)";
        row.has_elliptic_fibration = true;
        row.entries = {tame(2), tame(2), tame(2)};
        return row;
    }
    if (!d.base_ordinary.has_value())
        fail(Errc::InconsistentDescriptor, "e = -1, p = 2 needs the ordinary/supersingular flag");
    if (*d.base_ordinary) {
        row.note = "(ii-3)";
        row.has_elliptic_fibration = true;
        row.entries = {tame(2), wild(2, 0)};
        return row;
    }
    row.note = "(ii-2)";
    row.has_elliptic_fibration = true;
    row.entries = {wild(2, 1)};
    return row;
}

std::string format_fiber_row(const FiberRow& row) {
    std::ostringstream os;
    os << row.note << " ";
    if (!row.has_elliptic_fibration) {
        os << "no elliptic fibrations";
        return os.str();
    }
    if (row.entries.empty()) {
        os << "no multiple fibers";
        return os.str();
    }
    os << "(";
    for (size_t i = 0; i < row.entries.size(); ++i) {
        if (i) os << ",";
        const FiberEntry& f = row.entries[i];
        if (f.wild)
            os << *f.wild_exponent << "/" << f.multiplicity << "*";
        else
            os << f.multiplicity;
    }
    os << ")";
    return os.str();
}

uint64_t lambda_multisection(const SurfaceDescriptor& d) {
    FiberRow row = fiber_table(d);
    if (!row.has_elliptic_fibration)
        fail(Errc::NoEllipticFibration, "row " + row.note + " has no elliptic fibration");
    uint64_t l = 1;
    for (const FiberEntry& f : row.entries) l = std::lcm(l, f.multiplicity);
    return l;
}

bool nontriviality_gate(const SurfaceDescriptor& d) {
    return d.e == 0 && d.bundle == BundleKind::LineSum && d.ord_m >= 5;
}

} // namespace fmc
