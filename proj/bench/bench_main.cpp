// Timing comparison of the OpenMP kernels against their serial references.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "fractime/kernels.hpp"
#include "fractime/rng.hpp"
#include "fractime/spectral.hpp"
#include "fractime/strichartz.hpp"

using namespace fractime;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm up (plans, caches)
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, double serial_ms, double omp_ms) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_ms, omp_ms,
                serial_ms / omp_ms);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    Rng rng(42);
    GridFunction f(1, 16.0, 1 << 18);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};

    row("lr_norm (r=4, 2^18)",
        time_ms([&] { lr_norm_serial(f, 4.0); }, 20),
        time_ms([&] { lr_norm(f, 4.0); }, 20));

    std::vector<cplx> mult(f.total());
    for (std::size_t i = 0; i < mult.size(); ++i) mult[i] = std::polar(1.0, 1e-4 * double(i));
    row("spectral multiplier (2^18)",
        time_ms([&] { apply_spectral_multiplier_serial(f, mult); }, 10),
        time_ms([&] { apply_spectral_multiplier(f, mult); }, 10));

    auto E = FractalSet::cantor(0.5, 11);
    auto Ej = separated_subset(E, 2.0, 10);
    auto K = kernel_matrix(Ej.points, 2.0, 10, 4.0, 1);
    std::vector<double> a(Ej.points.size());
    for (auto& v : a) v = rng.normal();
    row("kernel matvec (1024 pts)",
        time_ms([&] { kernel_matvec_serial(K, a); }, 10),
        time_ms([&] { kernel_matvec(K, a); }, 10));

    // Batch propagation parallelizes over times; the one-thread baseline is
    // obtained by clamping the pool.
    {
        int n = grid_size_for_band(16.0, 7);
        auto g = random_band_field(1, 16.0, n, 7, 7);
        std::vector<double> times(256);
        for (std::size_t i = 0; i < times.size(); ++i) times[i] = double(i) / times.size();
        int full = omp_get_max_threads();
        omp_set_num_threads(1);
        double serial = time_ms([&] { propagated_norms(g, 2.0, times, 4.0); }, 3);
        omp_set_num_threads(full);
        double par = time_ms([&] { propagated_norms(g, 2.0, times, 4.0); }, 3);
        row("propagated_norms (256 t)", serial, par);
    }
    return 0;
}
