// Times the segment-parallel quadrature kernels against the serial reference
// on representative workloads: a large-a Haar oracle call and a Mexican-hat
// convergence grid.  Checks that both executions produce identical bits.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wasym/oracle.hpp"
#include "wasym/remainder.hpp"

using namespace wasym;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    const FreqProfile p3 = make_profile("haar-admissible:0.5");
    const FreqProfile p1 = make_profile("gauss:1");
    const WaveletSpec haar = WaveletSpec::haar();
    const WaveletSpec mexhat = WaveletSpec::mexican_hat();

    QuadratureSettings qser;
    qser.exec = quad::Exec::serial;
    QuadratureSettings qomp;
    qomp.exec = quad::Exec::openmp;

    const double a_big = quick ? 500.0 : 3162.2776601683795;
    const int reps = quick ? 1 : 3;

    const cplx vs = cwt_oracle(p3, haar, 0.0, a_big, qser);
    const cplx vp = cwt_oracle(p3, haar, 0.0, a_big, qomp);
    std::printf("haar oracle a=%.1f: serial and openmp results %s\n", a_big,
                vs == vp ? "identical (bitwise)" : "DIFFER");

    const double t_ser =
        time_ms([&] { cwt_oracle(p3, haar, 0.0, a_big, qser); }, reps);
    const double t_omp =
        time_ms([&] { cwt_oracle(p3, haar, 0.0, a_big, qomp); }, reps);
    std::printf("haar oracle a=%.1f : serial %8.2f ms | openmp %8.2f ms | speedup %.2fx\n",
                a_big, t_ser, t_omp, t_ser / t_omp);

    const std::vector<double> grid = log_spaced_grid(100.0, a_big, quick ? 4 : 6);
    qser.abs_tol = qomp.abs_tol = 1e-13;
    const double g_ser = time_ms(
        [&] { convergence_study(p1, mexhat, 0.0, 1, grid, qser); }, reps);
    const double g_omp = time_ms(
        [&] { convergence_study(p1, mexhat, 0.0, 1, grid, qomp); }, reps);
    std::printf("mexhat converge grid : serial %8.2f ms | openmp %8.2f ms | speedup %.2fx\n",
                g_ser, g_omp, g_ser / g_omp);
    return 0;
}
