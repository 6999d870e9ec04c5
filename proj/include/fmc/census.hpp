#ifndef FMC_CENSUS_HPP
#define FMC_CENSUS_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fmc/fm.hpp"

namespace fmc {

enum class CurveSource { CanonicalPerJ, AllSmoothModels, Explicit };
enum class OutputFormat { Csv, Json };

struct CensusConfig {
    std::vector<int64_t> primes;
    CurveSource source = CurveSource::CanonicalPerJ;
    std::vector<std::array<int64_t, 5>> explicit_curves; // (a1,a2,a3,a4,a6)
    uint64_t m_min = 2;
    uint64_t m_max = 1; // m_max < m_min means an empty range
    bool verify_oracle = false;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path; // empty = stdout
};

enum class RowStatus { Ok, NotFoundWithinTower, Unsupported };
const char* row_status_name(RowStatus s);

struct CensusRow {
    int64_t p = 0;
    int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    int64_t j = 0;
    bool supersingular = false;
    uint64_t m = 0;
    int aut_order = 0;
    std::string aut_label;
    std::optional<uint64_t> h_size;
    std::vector<uint64_t> h_members;
    std::optional<uint64_t> fm_count;
    std::vector<uint64_t> representatives;
    std::optional<uint64_t> oracle_count;
    std::optional<bool> bound_ok;
    RowStatus status = RowStatus::Ok;
};

struct CensusResult {
    std::vector<CensusRow> rows; // ordered by (p, curve, m)
    uint64_t ok_rows = 0;
    uint64_t escaped_rows = 0;
    uint64_t unsupported_rows = 0;
    uint64_t oracle_mismatches = 0;
};

/// One representative per automorphism-table row reachable at p:
/// for p >= 5 the j=0, j=1728 and a least-coefficient generic model; the
/// supersingular model at p = 3; the supersingular and a least ordinary model
/// at p = 2.
std::vector<WeierstrassCurve> canonical_curves(int64_t p);

/// Every smooth short model y^2 = x^3 + a4 x + a6 for p >= 5; every smooth
/// long model for p in {2, 3} (the short shape is degenerate there).
std::vector<WeierstrassCurve> all_smooth_curves(int64_t p);

/// Rows computed over the (prime, curve, m) grid; tower escapes and
/// unsupported orders become row statuses, never aborts. Rows may be computed
/// in parallel; emission order is canonical regardless.
CensusResult run_census(const CensusConfig& cfg);

void write_census_csv(const CensusResult& r, std::ostream& os);
void write_census_json(const CensusResult& r, std::ostream& os);
std::string census_summary(const CensusResult& r);

} // namespace fmc

#endif
