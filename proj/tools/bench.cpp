// Throughput comparison of the OpenMP batch kernels against their serial
// reference implementations.

#include "gatetime/batch.hpp"
#include "gatetime/gates.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gatetime;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
double seconds(Fn&& fn) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, int n) {
    std::printf("%-12s  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  (%.1f kgates/s)\n",
                name, serial * 1e3, parallel * 1e3, serial / parallel,
                n / parallel / 1e3);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch kernel benchmark: serial reference vs OpenMP"};
    int n = 20000;
    int n_decompose = 4000;
    std::uint64_t seed = 1;
    app.add_option("--n", n, "gates for invariants/min-time kernels");
    app.add_option("--n-decompose", n_decompose, "gates for the KAK kernel");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    std::mt19937_64 rng(seed);
    std::vector<Gate> gates;
    gates.reserve(n);
    for (int i = 0; i < n; ++i) gates.push_back(haar_su4(rng));
    const std::vector<Gate> small(gates.begin(),
                                  gates.begin() + std::min(n, n_decompose));
    const auto cfg = make_config(1.0);

    // warm-up, and keep the optimizer honest with the checksum
    double sink = invariants_batch(gates)[0].g2;

    const double inv_s = seconds([&] { sink += invariants_batch_serial(gates)[0].g2; });
    const double inv_p = seconds([&] { sink += invariants_batch(gates)[0].g2; });
    report("invariants", inv_s, inv_p, n);

    const double mt_s = seconds([&] { sink += min_time_batch_serial(gates, cfg)[0].t_star; });
    const double mt_p = seconds([&] { sink += min_time_batch(gates, cfg)[0].t_star; });
    report("min-time", mt_s, mt_p, n);

    const double kak_s = seconds(
        [&] { sink += decompose_batch_serial(small, seed)[0].reconstruction_error; });
    const double kak_p =
        seconds([&] { sink += decompose_batch(small, seed)[0].reconstruction_error; });
    report("kak", kak_s, kak_p, static_cast<int>(small.size()));

    std::printf("checksum %g\n", sink);
    return 0;
}
