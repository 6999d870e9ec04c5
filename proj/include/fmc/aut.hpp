#ifndef FMC_AUT_HPP
#define FMC_AUT_HPP

#include <string>
#include <vector>

#include "fmc/curve.hpp"

namespace fmc {

/// Curve automorphism fixing the origin, given as the coordinate change
/// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t with all five coefficient
/// relations fixed. The action on points is the inverse change.
struct Automorphism {
    FieldElement u, r, s, t;
    int field_degree() const { return u.ctx->k(); }

    bool operator==(const Automorphism& o) const {
        return u == o.u && r == o.r && s == o.s && t == o.t;
    }
    /// Canonical order: lexicographic on (u, r, s, t).
    bool operator<(const Automorphism& o) const {
        if (u != o.u) return u < o.u;
        if (r != o.r) return r < o.r;
        if (s != o.s) return s < o.s;
        return t < o.t;
    }
};

struct AutGroup {
    std::vector<Automorphism> elements; // canonically sorted
    std::string structure_label;        // Theorem-row name, e.g. "Z/2Z"
    int order = 0;
    const FieldContext* ctx = nullptr; // ambient parameter field
};

/// Expected automorphism-group order and label from (j, p): 2 / 4 / 6 away
/// from characteristic 2 and 3, 12 at p = 3 with j = 0, 24 at p = 2 with j = 0.
int expected_aut_order(const WeierstrassCurve& E);
std::string expected_aut_label(const WeierstrassCurve& E);

/// Enumerates Aut_0(E) by the staged constraint solve (u over the 24th roots
/// of unity, then per-characteristic root-finding for r, s, t), validating
/// every candidate against all five coefficient relations and a random-point
/// homomorphism check. Throws TableMismatch if the count exceeds the expected
/// order, NotFoundWithinTower if the tower cannot host the parameters.
AutGroup automorphism_group(const WeierstrassCurve& E);

/// phi(P) computed over the compositum of the parameter and point fields.
CurvePoint apply_automorphism(const WeierstrassCurve& E, const Automorphism& phi,
                              const CurvePoint& P);

/// Composite with apply(compose(a,b), P) == apply(a, apply(b, P)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse_of(const Automorphism& a);

Automorphism identity_automorphism(const WeierstrassCurve& E, const FieldContext& ctx);
Automorphism negation_automorphism(const WeierstrassCurve& E, const FieldContext& ctx);

struct GroupCheckReport {
    bool identity_ok = false;
    bool closure_ok = false;
    bool inverses_ok = false;
    bool order_ok = false;     // matches the expected Theorem-row order
    bool stabilizers_ok = false; // trivial stabilizer for every supplied point of order >= 4
    bool abelian = false;
    int order = 0;
    std::string label;
    std::vector<std::string> violations;
    bool all_ok() const {
        return identity_ok && closure_ok && inverses_ok && order_ok && stabilizers_ok;
    }
};

/// Verifies the group laws and the advertised order, and that no non-identity
/// automorphism fixes any supplied point of order >= 4.
GroupCheckReport group_structure_check(const WeierstrassCurve& E, const AutGroup& g,
                                       const std::vector<CurvePoint>& sample_points = {});

} // namespace fmc

#endif
