#include "fmc/census.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fmc/errors.hpp"
#include "fmc/torsion.hpp"

namespace fmc {

const char* row_status_name(RowStatus s) {
    switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::NotFoundWithinTower: return "not_found_within_tower";
    case RowStatus::Unsupported: return "unsupported";
    }
    return "?";
}

std::vector<WeierstrassCurve> canonical_curves(int64_t p) {
    std::vector<WeierstrassCurve> out;
    if (p >= 5) {
        out.emplace_back(p, 0, 0, 0, 0, 1); // j = 0
        out.emplace_back(p, 0, 0, 0, 1, 0); // j = 1728
        for (int64_t c = 1; c < p; ++c) {
            try {
                WeierstrassCurve E(p, 0, 0, 0, 1, c);
                if (E.j() != 0 && E.j() != 1728 % p) {
                    out.push_back(E);
                    break;
                }
            } catch (const Error&) {
                // singular model; next c
            }
        }
    } else if (p == 3) {
        out.emplace_back(p, 0, 0, 0, -1, 0);
    } else if (p == 2) {
        out.emplace_back(p, 0, 0, 1, 0, 0); // supersingular, j = 0
        out.emplace_back(p, 1, 0, 0, 0, 1); // least smooth ordinary model
    }
    std::sort(out.begin(), out.end(), [](const WeierstrassCurve& a, const WeierstrassCurve& b) {
        return std::array<int64_t, 5>{a.a1(), a.a2(), a.a3(), a.a4(), a.a6()} <
               std::array<int64_t, 5>{b.a1(), b.a2(), b.a3(), b.a4(), b.a6()};
    });
    return out;
}

std::vector<WeierstrassCurve> all_smooth_curves(int64_t p) {
    std::vector<WeierstrassCurve> out;
    if (p >= 5) {
        for (int64_t a4 = 0; a4 < p; ++a4)
            for (int64_t a6 = 0; a6 < p; ++a6) {
                try {
                    out.emplace_back(p, 0, 0, 0, a4, a6);
                } catch (const Error&) {
                }
            }
    } else {
        for (int64_t a1 = 0; a1 < p; ++a1)
            for (int64_t a2 = 0; a2 < p; ++a2)
                for (int64_t a3 = 0; a3 < p; ++a3)
                    for (int64_t a4 = 0; a4 < p; ++a4)
                        for (int64_t a6 = 0; a6 < p; ++a6) {
                            try {
                                out.emplace_back(p, a1, a2, a3, a4, a6);
                            } catch (const Error&) {
                            }
                        }
    }
    return out;
}

namespace {

CensusRow compute_row(const WeierstrassCurve& E, const AutGroup& aut, uint64_t m,
                      bool verify_oracle) {
    CensusRow row;
    row.p = E.p();
    row.a1 = E.a1();
    row.a2 = E.a2();
    row.a3 = E.a3();
    row.a4 = E.a4();
    row.a6 = E.a6();
    row.j = E.j();
    row.supersingular = E.is_supersingular();
    row.m = m;
    row.aut_order = aut.order;
    row.aut_label = aut.structure_label;
    try {
        TorsionData td = torsion_subgroup(E, m);
        if (td.structure == TorsionStructure::Trivial) {
            row.status = RowStatus::Unsupported; // no point of order m exists
            return row;
        }
        const CurvePoint& a = td.basis.at(0);
        PartnerReport rep = fm_partners(E, a, aut, false);
        row.h_size = rep.h.members.size();
        row.h_members = rep.h.members;
        row.fm_count = rep.count;
        row.representatives = rep.representatives;
        row.bound_ok = rep.bound_ok;
        if (verify_oracle) row.oracle_count = fm_oracle(E, a, aut);
        row.status = RowStatus::Ok;
    } catch (const Error& e) {
        if (e.code() == Errc::NotFoundWithinTower)
            row.status = RowStatus::NotFoundWithinTower;
        else if (e.code() == Errc::UnsupportedMixedOrder)
            row.status = RowStatus::Unsupported;
        else
            throw;
    }
    return row;
}

} // namespace

CensusResult run_census(const CensusConfig& cfg) {
    std::vector<int64_t> primes = cfg.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    struct Task {
        const WeierstrassCurve* curve;
        const AutGroup* aut;
        uint64_t m;
    };
    std::vector<WeierstrassCurve> curves;
    for (int64_t p : primes) {
        std::vector<WeierstrassCurve> cs;
        switch (cfg.source) {
        case CurveSource::CanonicalPerJ: cs = canonical_curves(p); break;
        case CurveSource::AllSmoothModels: cs = all_smooth_curves(p); break;
        case CurveSource::Explicit:
            for (const auto& t : cfg.explicit_curves)
                cs.emplace_back(p, t[0], t[1], t[2], t[3], t[4]);
            break;
        }
        std::sort(cs.begin(), cs.end(), [](const WeierstrassCurve& a, const WeierstrassCurve& b) {
            return std::array<int64_t, 5>{a.a1(), a.a2(), a.a3(), a.a4(), a.a6()} <
                   std::array<int64_t, 5>{b.a1(), b.a2(), b.a3(), b.a4(), b.a6()};
        });
        for (auto& c : cs) curves.push_back(c);
    }

    // Automorphism groups once per curve, before the parallel row loop.
    std::vector<AutGroup> auts;
    auts.reserve(curves.size());
    for (const WeierstrassCurve& E : curves) auts.push_back(automorphism_group(E));

    std::vector<Task> tasks;
    for (size_t ci = 0; ci < curves.size(); ++ci)
        for (uint64_t m = cfg.m_min; m <= cfg.m_max; ++m)
            tasks.push_back({&curves[ci], &auts[ci], m});

    CensusResult result;
    result.rows.resize(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < int64_t(tasks.size()); ++i) {
        const Task& t = tasks[size_t(i)];
        result.rows[size_t(i)] = compute_row(*t.curve, *t.aut, t.m, cfg.verify_oracle);
    }

    for (const CensusRow& row : result.rows) {
        switch (row.status) {
        case RowStatus::Ok: ++result.ok_rows; break;
        case RowStatus::NotFoundWithinTower: ++result.escaped_rows; break;
        case RowStatus::Unsupported: ++result.unsupported_rows; break;
        }
        if (row.oracle_count && row.fm_count && *row.oracle_count != *row.fm_count)
            ++result.oracle_mismatches;
    }
    return result;
}

namespace {

std::string join_semicolon(const std::vector<uint64_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ";";
        os << v[i];
    }
    return os.str();
}

} // namespace

void write_census_csv(const CensusResult& r, std::ostream& os) {
    os << "# fmc-census-csv v1\n";
    os << "p,a1,a2,a3,a4,a6,j,supersingular,m,aut_order,aut_label,h_size,h_members,"
          "fm_count,representatives,oracle_count,bound_ok,status\n";
    for (const CensusRow& row : r.rows) {
        os << row.p << "," << row.a1 << "," << row.a2 << "," << row.a3 << "," << row.a4 << ","
           << row.a6 << "," << row.j << "," << (row.supersingular ? "true" : "false") << ","
           << row.m << "," << row.aut_order << "," << row.aut_label << ",";
        if (row.h_size) os << *row.h_size;
        os << "," << join_semicolon(row.h_members) << ",";
        if (row.fm_count) os << *row.fm_count;
        os << "," << join_semicolon(row.representatives) << ",";
        if (row.oracle_count) os << *row.oracle_count;
        os << ",";
        if (row.bound_ok) os << (*row.bound_ok ? "true" : "false");
        os << "," << row_status_name(row.status) << "\n";
    }
    os << "# summary " << census_summary(r) << "\n";
}

void write_census_json(const CensusResult& r, std::ostream& os) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CensusRow& row : r.rows) {
        nlohmann::ordered_json o;
        o["p"] = row.p;
        o["a1"] = row.a1;
        o["a2"] = row.a2;
        o["a3"] = row.a3;
        o["a4"] = row.a4;
        o["a6"] = row.a6;
        o["j"] = row.j;
        o["supersingular"] = row.supersingular;
        o["m"] = row.m;
        o["aut_order"] = row.aut_order;
        o["aut_label"] = row.aut_label;
        if (row.h_size)
            o["h_size"] = *row.h_size;
        else
            o["h_size"] = nullptr;
        o["h_members"] = row.h_members;
        if (row.fm_count)
            o["fm_count"] = *row.fm_count;
        else
            o["fm_count"] = nullptr;
        o["representatives"] = row.representatives;
        if (row.oracle_count)
            o["oracle_count"] = *row.oracle_count;
        else
            o["oracle_count"] = nullptr;
        if (row.bound_ok)
            o["bound_ok"] = *row.bound_ok;
        else
            o["bound_ok"] = nullptr;
        o["status"] = row_status_name(row.status);
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << "\n";
}

std::string census_summary(const CensusResult& r) {
    std::ostringstream os;
    os << "rows=" << r.rows.size() << " ok=" << r.ok_rows << " escaped=" << r.escaped_rows
       << " unsupported=" << r.unsupported_rows << " oracle_mismatches=" << r.oracle_mismatches;
    return os.str();
}

} // namespace fmc
