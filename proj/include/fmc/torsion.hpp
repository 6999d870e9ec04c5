#ifndef FMC_TORSION_HPP
#define FMC_TORSION_HPP

#include <vector>

#include "fmc/curve.hpp"

namespace fmc {

constexpr uint64_t kOrderCap = 30; // M_MAX

enum class TorsionStructure {
    Rank2,   // E[m] = Z/m x Z/m (p does not divide m)
    CyclicP, // E[p^e] = Z/p^e (ordinary, m = p^e)
    Trivial, // E[p^e] = {O}   (supersingular, m = p^e)
    Mixed,   // m = p^e n with e > 0, n > 1: Z/m x Z/n on an ordinary curve
};

const char* torsion_structure_name(TorsionStructure s);

struct TorsionData {
    uint64_t m = 1;
    TorsionStructure structure = TorsionStructure::Rank2;
    /// Canonical basis (0, 1 or 2 points) over F_{p^field_degree}.
    std::vector<CurvePoint> basis;
    /// Least k <= K_MAX with the full m-torsion rational over F_{p^k}.
    int field_degree = 1;
    /// Every rational m-torsion point, canonically ordered (|E[m]| entries).
    std::vector<CurvePoint> all_points;
};

/// Structure and canonical basis of E[m] per the three-case classification,
/// searching extension degrees k <= K_MAX.
///
/// Small fields are verified by scanning and counting the points killed by m;
/// fields past the scan budget use exact group orders from the trace
/// recurrence plus a certified basis construction (every YES materializes the
/// full subgroup and checks its size, every NO exhibits a witness point whose
/// order contradicts containment).
///
/// Throws NotFoundWithinTower, UnsupportedMixedOrder, OrderTooSmall (m < 1).
TorsionData torsion_subgroup(const WeierstrassCurve& E, uint64_t m);

/// Least d with d | bound and d P = O; requires ord(P) | bound.
uint64_t order_dividing(const WeierstrassCurve& E, const CurvePoint& P, uint64_t bound);

namespace detail {
/// Scan budget separating the enumeration-verified path from the sampling
/// path. Tests lower it to force both paths onto the same instances.
extern uint128 torsion_scan_limit;
} // namespace detail

} // namespace fmc

#endif
