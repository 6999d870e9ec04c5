// Compares the serial reference kernels against the OpenMP-parallel ones on
// representative scan workloads and reports timings and speedups.
//
//   fmc_bench [--p P] [--k K]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fmc/poly.hpp"
#include "fmc/scan.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F> double timed(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return seconds_since(t0);
}

} // namespace

int main(int argc, char** argv) {
    int64_t p = 5;
    int k = 8;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--p") && i + 1 < argc) p = std::atoll(argv[++i]);
        if (!std::strcmp(argv[i], "--k") && i + 1 < argc) k = std::atoi(argv[++i]);
    }
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    const fmc::FieldContext& F = fmc::field_make(p, k);
    std::printf("field F_%lld^%d, %s elements\n", (long long)p, k,
                fmc::to_string_u128(F.q()).c_str());

    fmc::WeierstrassCurve E(p, 0, 0, 0, 1, p >= 5 ? 1 : 0);

    size_t n_serial = 0, n_par = 0;
    double ts = timed([&] { n_serial = fmc::enumerate_points_serial(E, k).size(); });
    double tp = timed([&] { n_par = fmc::enumerate_points(E, k).size(); });
    std::printf("enumerate_points   serial %8.3fs  parallel %8.3fs  speedup %5.2fx  (%zu == %zu: %s)\n",
                ts, tp, ts / tp, n_serial, n_par, n_serial == n_par ? "ok" : "MISMATCH");

    uint64_t c_serial = 0, c_par = 0;
    ts = timed([&] { c_serial = fmc::count_killed_by_serial(E, k, 6); });
    tp = timed([&] { c_par = fmc::count_killed_by(E, k, 6); });
    std::printf("count_killed_by(6) serial %8.3fs  parallel %8.3fs  speedup %5.2fx  (%llu == %llu: %s)\n",
                ts, tp, ts / tp, (unsigned long long)c_serial, (unsigned long long)c_par,
                c_serial == c_par ? "ok" : "MISMATCH");

    fmc::Poly f = fmc::poly_from_residues(F, {1, 0, 0, 1, 2, 0, 1}); // arbitrary sextic
    size_t r_serial = 0, r_par = 0;
    ts = timed([&] { r_serial = fmc::poly_roots_serial(f).size(); });
    tp = timed([&] { r_par = fmc::poly_roots(f).size(); });
    std::printf("poly_roots         serial %8.3fs  parallel %8.3fs  speedup %5.2fx  (%zu == %zu: %s)\n",
                ts, tp, ts / tp, r_serial, r_par, r_serial == r_par ? "ok" : "MISMATCH");
    return 0;
}
