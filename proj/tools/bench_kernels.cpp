// Compares the serial reference kernels against their OpenMP counterparts:
// band matvec, residual evaluation, the three-way border solve, and the full
// cyclic solve. Wall times only; the equivalence itself is covered by tests.

#ifdef HEPTAX_HAVE_OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>

#include "heptax/cyclic_smw.hpp"
#include "heptax/dense_oracle.hpp"
#include "heptax/kernels.hpp"

using namespace heptax;

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_best_of(int rounds, F&& fn) {
    double best = 1e100;
    for (int i = 0; i < rounds; ++i) {
        const auto t0 = clock_type::now();
        fn();
        const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (secs < best) best = secs;
    }
    return best;
}

void report(const std::string& name, std::size_t n, double serial, double parallel) {
    std::printf("%-22s n=%-9zu serial %10.6fs  parallel %10.6fs  speedup %5.2fx\n", name.c_str(),
                n, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef HEPTAX_HAVE_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP not enabled; parallel runs fall back to serial)\n");
#endif
    const int rounds = 5;

    {
        const std::size_t n = 2000000;
        GenSpec spec{SystemKind::Cyclic, n, 42, GenProfile::DiagonallyDominant, 0};
        auto [c, rhs] = generate_cyclic<double>(spec);
        std::vector<double> sink;
        const double serial = time_best_of(rounds, [&] { sink = matvec(c, rhs, Exec::Serial); });
        const double parallel =
            time_best_of(rounds, [&] { sink = matvec(c, rhs, Exec::Parallel); });
        report("cyclic matvec", n, serial, parallel);

        const double rs =
            time_best_of(rounds, [&] { (void)residual_inf(c, rhs, rhs, Exec::Serial); });
        const double rp =
            time_best_of(rounds, [&] { (void)residual_inf(c, rhs, rhs, Exec::Parallel); });
        report("cyclic residual", n, rs, rp);
    }

    {
        const std::size_t n = 500000;
        GenSpec spec{SystemKind::Cyclic, n, 43, GenProfile::DiagonallyDominant, 0};
        auto [c, rhs] = generate_cyclic<double>(spec);
        auto part = partition(c, rhs);
        auto rhat = reduce_rhs(part);
        const double serial = time_best_of(
            rounds, [&] { (void)solve_three(part, rhat, ZeroTest{}, Exec::Serial); });
        const double parallel = time_best_of(
            rounds, [&] { (void)solve_three(part, rhat, ZeroTest{}, Exec::Parallel); });
        report("three border solves", n, serial, parallel);

        SolveOptions par;
        par.exec = Exec::Parallel;
        const double ss = time_best_of(rounds, [&] { (void)solve_cyclic(c, rhs); });
        const double sp = time_best_of(rounds, [&] { (void)solve_cyclic(c, rhs, par); });
        report("full cyclic solve", n, ss, sp);
    }

    {
        const std::size_t n = 4096;
        GenSpec spec{SystemKind::Hepta, n, 44, GenProfile::DiagonallyDominant, 0};
        auto [h, rhs] = generate_hepta<double>(spec);
        auto fac = factorize(h);
        std::vector<std::vector<double>> many(16, rhs);
        const double serial =
            time_best_of(rounds, [&] { (void)solve_multi(fac, many, Exec::Serial); });
        const double parallel =
            time_best_of(rounds, [&] { (void)solve_multi(fac, many, Exec::Parallel); });
        report("16-rhs multi solve", n, serial, parallel);
    }

    return 0;
}
