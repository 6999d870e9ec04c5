#ifndef FMC_CURVE_HPP
#define FMC_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fmc/field.hpp"
#include "fmc/intmath.hpp"

namespace fmc {

/// Point on a long Weierstrass curve, rational over one F_{p^k}.
struct CurvePoint {
    const FieldContext* ctx = nullptr;
    bool at_infinity = true;
    FieldElement x, y;

    int degree() const { return ctx->k(); }
    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
    /// Canonical order: infinity first, then lexicographic on (x, y).
    bool operator<(const CurvePoint& o) const;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p, coefficients in the
/// prime field. The group law is the chord-tangent law for the long model and
/// is valid in characteristic 2 and 3. Immutable once constructed.
class WeierstrassCurve {
  public:
    /// Throws SingularModel when the discriminant vanishes, NotPrime for bad p.
    WeierstrassCurve(int64_t p, int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6);

    int64_t p() const { return p_; }
    int64_t a1() const { return a_[0]; }
    int64_t a2() const { return a_[1]; }
    int64_t a3() const { return a_[2]; }
    int64_t a4() const { return a_[3]; }
    int64_t a6() const { return a_[4]; }
    int64_t b2() const { return b2_; }
    int64_t b4() const { return b4_; }
    int64_t b6() const { return b6_; }
    int64_t b8() const { return b8_; }
    int64_t c4() const { return c4_; }
    int64_t c6() const { return c6_; }
    int64_t disc() const { return disc_; }
    int64_t j() const { return j_; }

    /// Frobenius trace t = p + 1 - #E(F_p), from an exhaustive F_p count.
    int64_t trace() const { return trace_; }
    bool is_supersingular() const { return trace_ % p_ == 0; }
    /// #E(F_{p^k}) via the trace recurrence a_k = t a_{k-1} - p a_{k-2}.
    uint128 group_order(int k) const;

    CurvePoint infinity(const FieldContext& ctx) const;
    /// Validates the equation; throws PointNotOnCurve.
    CurvePoint point(const FieldElement& x, const FieldElement& y) const;
    bool contains(const FieldElement& x, const FieldElement& y) const;

    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint scalar_mul(int128 n, const CurvePoint& P) const;
    /// Least n >= 1 with n P = O; divides the ambient group order.
    uint128 point_order(const CurvePoint& P) const;

    /// Uniform-ish random rational point (used by the torsion sampler).
    CurvePoint random_point(const FieldContext& ctx, Rng& rng) const;

    std::string label() const; // "p=5 [0,0,0,1,0]"

  private:
    int64_t p_;
    int64_t a_[5];
    int64_t b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
    int64_t trace_;
    FieldElement coeff(int i, const FieldContext& ctx) const; // a_i lifted
    friend struct CurveScan;
};

/// Coefficient tuple of the curve, transformed by x = u^2 x' + r,
/// y = u^3 y' + u^2 s x' + t, computed in the parameters' field.
/// Index order (a1, a2, a3, a4, a6).
std::array<FieldElement, 5> transform_coefficients(const WeierstrassCurve& E,
                                                   const FieldElement& u, const FieldElement& r,
                                                   const FieldElement& s, const FieldElement& t);

} // namespace fmc

#endif
