#include "fmc/curve.hpp"

#include <sstream>

#include "fmc/errors.hpp"

namespace fmc {

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (ctx != o.ctx) fail(Errc::ContextMismatch, "comparing points over different fields");
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return x == o.x && y == o.y;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
    if (ctx != o.ctx) fail(Errc::ContextMismatch, "ordering points over different fields");
    if (at_infinity != o.at_infinity) return at_infinity;
    if (at_infinity) return false;
    if (x != o.x) return x < o.x;
    return y < o.y;
}

namespace {
int64_t mod_p(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}
} // namespace

WeierstrassCurve::WeierstrassCurve(int64_t p, int64_t a1, int64_t a2, int64_t a3, int64_t a4,
                                   int64_t a6)
    : p_(p) {
    field_make(p, 1); // validates primality and the p <= 97 bound
    a_[0] = mod_p(a1, p);
    a_[1] = mod_p(a2, p);
    a_[2] = mod_p(a3, p);
    a_[3] = mod_p(a4, p);
    a_[4] = mod_p(a6, p);
    const int64_t A1 = a_[0], A2 = a_[1], A3 = a_[2], A4 = a_[3], A6 = a_[4];
    b2_ = mod_p(A1 * A1 + 4 * A2, p);
    b4_ = mod_p(2 * A4 + A1 * A3, p);
    b6_ = mod_p(A3 * A3 + 4 * A6, p);
    b8_ = mod_p(A1 * A1 % p * A6 + 4 * A2 * A6 - A1 * A3 % p * A4 + A2 * A3 % p * A3 - A4 * A4, p);
    c4_ = mod_p(b2_ * b2_ - 24 * b4_, p);
    c6_ = mod_p(-b2_ * b2_ % p * b2_ + 36 * b2_ * b4_ - 216 * b6_, p);
    disc_ = mod_p(-b2_ * b2_ % p * b8_ - 8 * b4_ * b4_ % p * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ % p * b6_, p);
    if (disc_ == 0)
        fail(Errc::SingularModel, "discriminant vanishes for " + label());
    // j = c4^3 / disc
    int64_t c43 = c4_ * c4_ % p * c4_ % p;
    int64_t dinv = 1, b = disc_ % p, e = p - 2;
    while (e) {
        if (e & 1) dinv = dinv * b % p;
        b = b * b % p;
        e >>= 1;
    }
    j_ = c43 * dinv % p;

    // Exhaustive F_p point count for the trace.
    const FieldContext& fp = field_make(p, 1);
    uint64_t count = 1; // infinity
    for (int64_t xv = 0; xv < p; ++xv) {
        FieldElement x = fp.from_residue(xv);
        FieldElement lin = fp.add(fp.mul(fp.from_residue(A1), x), fp.from_residue(A3));
        FieldElement rhs = fp.add(
            fp.add(fp.mul(fp.mul(x, x), x), fp.mul(fp.from_residue(A2), fp.mul(x, x))),
            fp.add(fp.mul(fp.from_residue(A4), x), fp.from_residue(A6)));
        count += fp.solve_quadratic(lin, rhs).size();
    }
    trace_ = p + 1 - int64_t(count);
}

uint128 WeierstrassCurve::group_order(int k) const {
    if (k < 1 || k > kmax()) fail(Errc::DegreeTooLarge, "group_order degree " + std::to_string(k));
    int128 prev = 2, cur = trace_;
    for (int i = 1; i < k; ++i) {
        int128 next = int128(trace_) * cur - int128(p_) * prev;
        prev = cur;
        cur = next;
    }
    int128 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p_;
    return uint128(pk + 1 - cur);
}

FieldElement WeierstrassCurve::coeff(int i, const FieldContext& ctx) const {
    return ctx.from_residue(a_[i]);
}

CurvePoint WeierstrassCurve::infinity(const FieldContext& ctx) const {
    CurvePoint P;
    P.ctx = &ctx;
    P.at_infinity = true;
    P.x = ctx.zero();
    P.y = ctx.zero();
    return P;
}

bool WeierstrassCurve::contains(const FieldElement& x, const FieldElement& y) const {
    const FieldContext& F = *x.ctx;
    FieldElement lhs = F.add(F.mul(y, y), F.add(F.mul(coeff(0, F), F.mul(x, y)), F.mul(coeff(2, F), y)));
    FieldElement x2 = F.mul(x, x);
    FieldElement rhs = F.add(F.add(F.mul(x2, x), F.mul(coeff(1, F), x2)),
                             F.add(F.mul(coeff(3, F), x), coeff(4, F)));
    return lhs == rhs;
}

CurvePoint WeierstrassCurve::point(const FieldElement& x, const FieldElement& y) const {
    if (x.ctx != y.ctx) fail(Errc::ContextMismatch, "point coordinates");
    if (x.ctx->p() != p_) fail(Errc::ContextMismatch, "point field characteristic");
    if (!contains(x, y))
        fail(Errc::PointNotOnCurve, "(" + x.ctx->to_string(x) + ", " + y.ctx->to_string(y) +
                                        ") not on " + label());
    CurvePoint P;
    P.ctx = x.ctx;
    P.at_infinity = false;
    P.x = x;
    P.y = y;
    return P;
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& P) const {
    if (P.at_infinity) return P;
    const FieldContext& F = *P.ctx;
    CurvePoint R = P;
    // -(x, y) = (x, -y - a1 x - a3)
    R.y = F.neg(F.add(P.y, F.add(F.mul(coeff(0, F), P.x), coeff(2, F))));
    return R;
}

CurvePoint WeierstrassCurve::add(const CurvePoint& P, const CurvePoint& Q) const {
    if (P.ctx != Q.ctx) fail(Errc::ContextMismatch, "adding points over different fields");
    if (P.at_infinity) return Q;
    if (Q.at_infinity) return P;
    const FieldContext& F = *P.ctx;
    const FieldElement A1 = coeff(0, F), A2 = coeff(1, F), A3 = coeff(2, F), A4 = coeff(3, F);
    FieldElement lambda;
    if (P.x == Q.x) {
        // Q == -P (covers the 2-torsion doubling case as well)
        FieldElement negy = F.neg(F.add(P.y, F.add(F.mul(A1, P.x), A3)));
        if (Q.y == negy) return infinity(F);
        // tangent slope
        FieldElement num = F.sub(
            F.add(F.add(F.mul(F.from_residue(3), F.mul(P.x, P.x)),
                        F.mul(F.mul(F.from_residue(2), A2), P.x)),
                  A4),
            F.mul(A1, P.y));
        FieldElement den = F.add(F.add(F.mul(F.from_residue(2), P.y), F.mul(A1, P.x)), A3);
        lambda = F.mul(num, F.inv(den));
    } else {
        lambda = F.mul(F.sub(Q.y, P.y), F.inv(F.sub(Q.x, P.x)));
    }
    FieldElement x3 = F.sub(F.sub(F.sub(F.add(F.mul(lambda, lambda), F.mul(A1, lambda)), A2), P.x), Q.x);
    FieldElement y3 = F.sub(F.sub(F.sub(F.mul(lambda, F.sub(P.x, x3)), P.y), F.mul(A1, x3)), A3);
    CurvePoint R;
    R.ctx = &F;
    R.at_infinity = false;
    R.x = x3;
    R.y = y3;
    return R;
}

CurvePoint WeierstrassCurve::scalar_mul(int128 n, const CurvePoint& P) const {
    CurvePoint base = P;
    if (n < 0) {
        base = negate(P);
        n = -n;
    }
    CurvePoint acc = infinity(*P.ctx);
    uint128 e = uint128(n);
    while (e > 0) {
        if (e & 1) acc = add(acc, base);
        base = add(base, base);
        e >>= 1;
    }
    return acc;
}

uint128 WeierstrassCurve::point_order(const CurvePoint& P) const {
    if (P.at_infinity) return 1;
    uint128 n = group_order(P.ctx->k());
    std::vector<uint128> fac = factorize(n);
    for (size_t i = 0; i < fac.size();) {
        uint128 q = fac[i];
        size_t j = i;
        while (j < fac.size() && fac[j] == q) ++j;
        for (size_t rep = 0; rep < j - i; ++rep) {
            if (!scalar_mul(int128(n / q), P).at_infinity) break;
            n /= q;
        }
        i = j;
    }
    return n;
}

CurvePoint WeierstrassCurve::random_point(const FieldContext& ctx, Rng& rng) const {
    if (ctx.p() != p_) fail(Errc::ContextMismatch, "random point field");
    for (int tries = 0; tries < 1 << 20; ++tries) {
        FieldElement x = ctx.from_index(rng.below128(ctx.q()));
        FieldElement lin = ctx.add(ctx.mul(coeff(0, ctx), x), coeff(2, ctx));
        FieldElement x2 = ctx.mul(x, x);
        FieldElement rhs = ctx.add(ctx.add(ctx.mul(x2, x), ctx.mul(coeff(1, ctx), x2)),
                                   ctx.add(ctx.mul(coeff(3, ctx), x), coeff(4, ctx)));
        std::vector<FieldElement> ys = ctx.solve_quadratic(lin, rhs);
        if (ys.empty()) continue;
        CurvePoint P;
        P.ctx = &ctx;
        P.at_infinity = false;
        P.x = x;
        P.y = ys[rng.below(ys.size())];
        return P;
    }
    fail(Errc::Internal, "random_point exhausted retries");
}

std::string WeierstrassCurve::label() const {
    std::ostringstream os;
    os << "p=" << p_ << " [" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << ","
       << a_[4] << "]";
    return os.str();
}

std::array<FieldElement, 5> transform_coefficients(const WeierstrassCurve& E,
                                                   const FieldElement& u, const FieldElement& r,
                                                   const FieldElement& s, const FieldElement& t) {
    const FieldContext& F = *u.ctx;
    if (r.ctx != &F || s.ctx != &F || t.ctx != &F)
        fail(Errc::ContextMismatch, "transform parameters");
    if (u.is_zero()) fail(Errc::DivisionByZero, "transform with u = 0");
    const FieldElement a1 = F.from_residue(E.a1()), a2 = F.from_residue(E.a2()),
                       a3 = F.from_residue(E.a3()), a4 = F.from_residue(E.a4()),
                       a6 = F.from_residue(E.a6());
    const FieldElement two = F.from_residue(2), three = F.from_residue(3);
    FieldElement ui = F.inv(u);
    FieldElement u2i = F.mul(ui, ui);
    FieldElement u3i = F.mul(u2i, ui);
    FieldElement u4i = F.mul(u2i, u2i);
    FieldElement u6i = F.mul(u3i, u3i);
    FieldElement s2 = F.mul(s, s), r2 = F.mul(r, r), r3 = F.mul(r2, r), t2 = F.mul(t, t);
    // Standard transformation of (a1, ..., a6) under the substitution above.
    FieldElement na1 = F.mul(ui, F.add(a1, F.mul(two, s)));
    FieldElement na2 =
        F.mul(u2i, F.sub(F.add(a2, F.mul(three, r)), F.add(F.mul(s, a1), s2)));
    FieldElement na3 = F.mul(u3i, F.add(F.add(a3, F.mul(r, a1)), F.mul(two, t)));
    FieldElement na4 = F.mul(
        u4i, F.sub(F.add(F.add(a4, F.mul(F.mul(two, r), a2)), F.mul(three, r2)),
                   F.add(F.add(F.mul(s, a3), F.mul(F.add(t, F.mul(r, s)), a1)),
                         F.mul(F.mul(two, s), t))));
    FieldElement na6 =
        F.mul(u6i, F.sub(F.add(F.add(F.add(a6, F.mul(r, a4)), F.mul(r2, a2)), r3),
                         F.add(F.add(F.mul(t, a3), t2), F.mul(F.mul(r, t), a1))));
    return {na1, na2, na3, na4, na6};
}

} // namespace fmc
