#ifndef FMC_SCAN_HPP
#define FMC_SCAN_HPP

#include <vector>

#include "fmc/curve.hpp"

namespace fmc {

// Field-wide scans over E(F_{p^k}). Each kernel has an OpenMP-parallel entry
// point and a serial reference; both return identical, canonically ordered
// results. The parallel variants fall back to serial when built without
// OpenMP or when the field is small.

/// All F_{p^k}-rational points, infinity first. Theta(p^k) work.
std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& E, int k);
std::vector<CurvePoint> enumerate_points_serial(const WeierstrassCurve& E, int k);

/// Number of rational points P with m P = O.
uint64_t count_killed_by(const WeierstrassCurve& E, int k, uint64_t m);
uint64_t count_killed_by_serial(const WeierstrassCurve& E, int k, uint64_t m);

/// The rational points killed by m, canonically ordered (small fields only;
/// the result has at most m^2 entries).
std::vector<CurvePoint> collect_killed_by(const WeierstrassCurve& E, int k, uint64_t m);

} // namespace fmc

#endif
