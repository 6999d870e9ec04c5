#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fmc/census.hpp"
#include "fmc/errors.hpp"
#include "fmc/fm.hpp"
#include "fmc/torsion.hpp"

namespace {

fmc::WeierstrassCurve curve_from(int64_t p, const std::vector<int64_t>& a) {
    if (a.size() != 5)
        fmc::fail(fmc::Errc::InconsistentDescriptor, "--curve expects a1,a2,a3,a4,a6");
    return fmc::WeierstrassCurve(p, a[0], a[1], a[2], a[3], a[4]);
}

std::string join(const std::vector<uint64_t>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void print_point(const fmc::WeierstrassCurve& E, const fmc::CurvePoint& P, std::ostream& os) {
    if (P.at_infinity) {
        os << "O";
        return;
    }
    os << "(" << P.ctx->to_string(P.x) << ", " << P.ctx->to_string(P.y) << ")";
    (void)E;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact census of Fourier-Mukai partner counts for elliptic ruled surfaces "
                 "P(O+L) over finite fields"};
    app.require_subcommand(1);

    int64_t p = 0;
    std::vector<int64_t> curve;
    uint64_t m = 0;
    bool verify_oracle = false;

    auto add_curve_opts = [&](CLI::App* sub, bool need_m) {
        sub->add_option("--p", p, "prime characteristic")->required();
        sub->add_option("--curve", curve, "coefficients a1,a2,a3,a4,a6")
            ->required()
            ->delimiter(',')
            ->expected(5);
        if (need_m) sub->add_option("--m", m, "torsion order")->required();
    };

    CLI::App* aut = app.add_subcommand("aut", "automorphism group of a curve");
    add_curve_opts(aut, false);

    CLI::App* torsion = app.add_subcommand("torsion", "structure and basis of E[m]");
    add_curve_opts(torsion, true);

    CLI::App* hgroup = app.add_subcommand("hgroup", "multiplier subgroup H of (Z/mZ)*");
    add_curve_opts(hgroup, true);

    CLI::App* partners = app.add_subcommand("partners", "partner classes and count phi(m)/|H|");
    add_curve_opts(partners, true);
    partners->add_flag("--verify-oracle", verify_oracle, "cross-check with the orbit oracle");

    int e_val = 0;
    std::string bundle, base;
    uint64_t ord_m = 0;
    int64_t fiber_p = 0;
    CLI::App* fibers = app.add_subcommand("fibers", "singular-fiber table row for a ruled surface");
    fibers->add_option("--e", e_val, "normalized degree (0 or -1)")->required();
    fibers
        ->add_option("--bundle", bundle,
                     "trivial_sum | line_sum | line_sum_infinite | indecomposable")
        ->default_val("trivial_sum");
    fibers->add_option("--ord", ord_m, "order of L for line_sum");
    fibers->add_option("--p", fiber_p, "characteristic (0 allowed in the table)");
    fibers->add_option("--base", base, "ordinary | supersingular (e=-1, p=2)");

    std::vector<int64_t> census_primes;
    std::string source = "canonical_per_j";
    std::vector<std::string> explicit_curves;
    uint64_t m_min = 2, m_max = 1;
    std::string format = "csv", out_path;
    CLI::App* census = app.add_subcommand("census", "parameter-grid census with CSV/JSON output");
    census->add_option("--p", census_primes, "primes to sweep")->required();
    census->add_option("--curve-source", source,
                       "canonical_per_j | all_smooth_models | explicit");
    census->add_option("--curve", explicit_curves,
                       "explicit a1,a2,a3,a4,a6 (repeatable; with --curve-source explicit)");
    census->add_option("--m-min", m_min, "least m (default 2)");
    census->add_option("--m-max", m_max, "greatest m");
    census->add_flag("--verify-oracle", verify_oracle, "store and check the oracle count per row");
    census->add_option("--format", format, "csv | json")->default_val("csv");
    census->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (aut->parsed()) {
        fmc::WeierstrassCurve E = curve_from(p, curve);
        fmc::AutGroup g = fmc::automorphism_group(E);
        std::cout << "curve " << E.label() << "\n";
        std::cout << "j " << E.j() << "\n";
        std::cout << "supersingular " << (E.is_supersingular() ? "true" : "false") << "\n";
        std::cout << "order " << g.order << "\n";
        std::cout << "label " << g.structure_label << "\n";
        std::cout << "parameter_field F_" << E.p() << "^" << g.ctx->k() << "\n";
        for (const fmc::Automorphism& a : g.elements) {
            std::cout << "  (u,r,s,t) = (" << g.ctx->to_string(a.u) << ", " << g.ctx->to_string(a.r)
                      << ", " << g.ctx->to_string(a.s) << ", " << g.ctx->to_string(a.t) << ")\n";
        }
        return 0;
    }
    if (torsion->parsed()) {
        fmc::WeierstrassCurve E = curve_from(p, curve);
        fmc::TorsionData td = fmc::torsion_subgroup(E, m);
        std::cout << "m " << td.m << "\n";
        std::cout << "structure " << fmc::torsion_structure_name(td.structure) << "\n";
        std::cout << "field_degree " << td.field_degree << "\n";
        std::cout << "points " << td.all_points.size() << "\n";
        for (const fmc::CurvePoint& b : td.basis) {
            std::cout << "basis ";
            print_point(E, b, std::cout);
            std::cout << " order " << fmc::order_dividing(E, b, m) << "\n";
        }
        return 0;
    }
    if (hgroup->parsed() || partners->parsed()) {
        fmc::WeierstrassCurve E = curve_from(p, curve);
        fmc::TorsionData td = fmc::torsion_subgroup(E, m);
        if (td.structure == fmc::TorsionStructure::Trivial || td.basis.empty())
            fmc::fail(fmc::Errc::UnsupportedMixedOrder,
                      "no point of order " + std::to_string(m) + " on this curve");
        const fmc::CurvePoint& a = td.basis.front();
        if (hgroup->parsed()) {
            fmc::HSubgroup h = fmc::h_group(E, a);
            std::cout << "m " << h.m << "\n";
            std::cout << "h_size " << h.members.size() << "\n";
            std::cout << "h_members " << join(h.members, ";") << "\n";
            return 0;
        }
        fmc::PartnerReport rep = fmc::fm_partners(E, a, verify_oracle);
        std::cout << "m " << rep.m << "\n";
        std::cout << "h_size " << rep.h.members.size() << "\n";
        std::cout << "h_members " << join(rep.h.members, ";") << "\n";
        std::cout << "fm_count " << rep.count << "\n";
        std::cout << "representatives " << join(rep.representatives, ";") << "\n";
        std::cout << "bound_ok " << (rep.bound_ok ? "true" : "false") << "\n";
        if (rep.oracle_count) std::cout << "oracle_count " << *rep.oracle_count << "\n";
        return 0;
    }
    if (fibers->parsed()) {
        fmc::SurfaceDescriptor d;
        d.e = e_val;
        if (bundle == "trivial_sum")
            d.bundle = fmc::BundleKind::TrivialSum;
        else if (bundle == "line_sum")
            d.bundle = fmc::BundleKind::LineSum;
        else if (bundle == "line_sum_infinite")
            d.bundle = fmc::BundleKind::LineSumInfinite;
        else if (bundle == "indecomposable")
            d.bundle = fmc::BundleKind::Indecomposable;
        else
            fmc::fail(fmc::Errc::InconsistentDescriptor, "unknown bundle kind " + bundle);
        d.ord_m = ord_m;
        d.p = fiber_p;
        if (base == "ordinary")
            d.base_ordinary = true;
        else if (base == "supersingular")
            d.base_ordinary = false;
        else if (!base.empty())
            fmc::fail(fmc::Errc::InconsistentDescriptor, "unknown base flag " + base);
        fmc::FiberRow row = fmc::fiber_table(d);
        std::cout << fmc::format_fiber_row(row) << "\n";
        std::cout << "lambda ";
        try {
            std::cout << fmc::lambda_multisection(d) << "\n";
        } catch (const fmc::Error&) {
            std::cout << "-\n";
        }
        std::cout << "nontriviality_gate " << (fmc::nontriviality_gate(d) ? "true" : "false")
                  << "\n";
        return 0;
    }
    // census
    fmc::CensusConfig cfg;
    cfg.primes = census_primes;
    if (source == "canonical_per_j")
        cfg.source = fmc::CurveSource::CanonicalPerJ;
    else if (source == "all_smooth_models")
        cfg.source = fmc::CurveSource::AllSmoothModels;
    else if (source == "explicit")
        cfg.source = fmc::CurveSource::Explicit;
    else
        fmc::fail(fmc::Errc::InconsistentDescriptor, "unknown curve source " + source);
    for (const std::string& spec : explicit_curves) {
        std::array<int64_t, 5> t{};
        size_t pos = 0;
        for (int i = 0; i < 5; ++i) {
            size_t comma = spec.find(',', pos);
            std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
            t[size_t(i)] = std::stoll(tok);
            if (comma == std::string::npos && i != 4)
                fmc::fail(fmc::Errc::InconsistentDescriptor, "--curve expects five coefficients");
            pos = comma + 1;
        }
        cfg.explicit_curves.push_back(t);
    }
    if (!cfg.explicit_curves.empty()) cfg.source = fmc::CurveSource::Explicit;
    cfg.m_min = m_min;
    cfg.m_max = m_max;
    cfg.verify_oracle = verify_oracle;
    cfg.format = (format == "json") ? fmc::OutputFormat::Json : fmc::OutputFormat::Csv;
    if (format != "json" && format != "csv")
        fmc::fail(fmc::Errc::InconsistentDescriptor, "unknown format " + format);

    fmc::CensusResult result = fmc::run_census(cfg);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 3;
        }
        os = &file;
    }
    if (cfg.format == fmc::OutputFormat::Json)
        fmc::write_census_json(result, *os);
    else
        fmc::write_census_csv(result, *os);
    if (os == &file) {
        file.close();
        if (!file) {
            std::cerr << "write failed: " << out_path << "\n";
            return 3;
        }
    }
    std::cerr << census_summary(result) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fmc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
