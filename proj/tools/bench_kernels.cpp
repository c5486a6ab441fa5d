// Benchmark of the OpenMP kernels against their serial references:
//   - the quadratic-character sum behind elliptic point counting
//   - the per-m trace loop of the zeta pipeline
// Usage: bench_kernels [p] (default p = 50000017)

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gwzeta/kernels.hpp"
#include "gwzeta/zeta.hpp"

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace gwzeta;
    long p = argc > 1 ? std::atol(argv[1]) : 50000017L;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels fall back to serial\n");
#endif

    long serial_sum = 0, parallel_sum = 0;
    double t_serial = time_ms([&] { serial_sum = elliptic_char_sum_serial(p, 2, 3); });
    double t_parallel = time_ms([&] { parallel_sum = elliptic_char_sum_parallel(p, 2, 3); });
    std::printf("char sum over F_%ld: serial %.1f ms, parallel %.1f ms (speedup %.2fx)%s\n", p,
                t_serial, t_parallel, t_serial / t_parallel,
                serial_sum == parallel_sum ? "" : "  MISMATCH");

    FqTag f = FqTag::make(5);
    // fresh copies per run so the memoized count cache starts cold each time
    Variety x = product(grassmannian(f, 1, 3), projective_space(f, 2));
    const int order = 400;
    double t_zeta_serial = time_ms([&] { dlog_zeta_serial(x, order); });
    Variety y = product(grassmannian(f, 1, 3), projective_space(f, 2));
    double t_zeta_parallel = time_ms([&] { dlog_zeta(y, order); });
    std::printf("dlog zeta of %s to order %d: serial %.1f ms, parallel %.1f ms (speedup %.2fx)\n",
                x.label().c_str(), order, t_zeta_serial, t_zeta_parallel,
                t_zeta_serial / t_zeta_parallel);
    return serial_sum == parallel_sum ? 0 : 1;
}
