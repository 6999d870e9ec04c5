#ifndef FMC_FM_HPP
#define FMC_FM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fmc/aut.hpp"
#include "fmc/curve.hpp"

namespace fmc {

/// (Z/mZ)^*. For m = 1 the group is trivial with the single residue class 0.
struct UnitGroup {
    uint64_t m = 1;
    std::vector<uint64_t> elements; // sorted
    uint64_t phi = 1;
};

UnitGroup unit_group(uint64_t m);

/// H = { i in (Z/mZ)^* : some automorphism multiplies a by i }, with one
/// witness automorphism per member.
struct HSubgroup {
    uint64_t m = 1;
    std::vector<uint64_t> members; // sorted, contains 1 and m-1
    std::map<uint64_t, Automorphism> witness;
};

/// Requires ord(a) = m >= 2 (OrderTooSmall otherwise). The discrete logs
/// phi(a) = i a are found by scanning i in [1, m).
HSubgroup h_group(const WeierstrassCurve& E, const CurvePoint& a);
HSubgroup h_group(const WeierstrassCurve& E, const CurvePoint& a, const AutGroup& aut);

struct PartnerReport {
    uint64_t m = 1;
    HSubgroup h;
    std::vector<uint64_t> representatives; // least member of each coset of H
    uint64_t count = 1;                    // phi(m) / |H|
    bool bound_ok = true;                  // count <= phi(m)/2 when m >= 3
    std::optional<uint64_t> oracle_count;
};

/// Partner classes of P(O + L) for L of order m corresponding to the point a:
/// cosets of H in the unit group, counted phi(m)/|H|.
PartnerReport fm_partners(const WeierstrassCurve& E, const CurvePoint& a,
                          bool with_oracle = false);
PartnerReport fm_partners(const WeierstrassCurve& E, const CurvePoint& a, const AutGroup& aut,
                          bool with_oracle);

/// Independent count: the number of classes of the relation i ~ j iff some
/// automorphism maps i*a to j*a, by direct point computation (no H shortcut).
uint64_t fm_oracle(const WeierstrassCurve& E, const CurvePoint& a);
uint64_t fm_oracle(const WeierstrassCurve& E, const CurvePoint& a, const AutGroup& aut);

// ---------------------------------------------------------------------------
// Ruled-surface fiber data

enum class BundleKind { TrivialSum, LineSum, LineSumInfinite, Indecomposable };

struct SurfaceDescriptor {
    int e = 0; // 0 or -1
    BundleKind bundle = BundleKind::TrivialSum;
    uint64_t ord_m = 0;        // order of L for LineSum
    int64_t p = 0;             // characteristic (0 allowed for table lookups)
    std::optional<bool> base_ordinary; // required when e = -1 and p = 2
};

struct FiberEntry {
    uint64_t multiplicity = 0;
    std::optional<int64_t> wild_exponent; // the a_i of a wild fiber
    bool wild = false;
};

struct FiberRow {
    std::string note; // row label, "(i-1)" ... "(ii-3)"
    bool has_elliptic_fibration = false;
    std::vector<FiberEntry> entries;
};

/// The matching classification row; throws InconsistentDescriptor.
FiberRow fiber_table(const SurfaceDescriptor& d);

/// Multiplicities in the paper's notation: tame "m", wild "a/m*".
std::string format_fiber_row(const FiberRow& row);

/// Multisection index of the fibration (lcm of the multiple-fiber
/// multiplicities); throws NoEllipticFibration for the fibration-free rows.
uint64_t lambda_multisection(const SurfaceDescriptor& d);

/// True exactly for the decomposable ord-m case with m >= 5, the only shape
/// that can carry non-trivial partners.
bool nontriviality_gate(const SurfaceDescriptor& d);

} // namespace fmc

#endif
