// Serial reference vs OpenMP sweeps: wall time and output identity.

#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "distvar/canonical.hpp"
#include "distvar/catalog.hpp"
#include "distvar/inner.hpp"

using namespace distvar;

namespace {

template <class F>
double time_ms(F&& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool same_points(const std::vector<VarietyPoint>& a, const std::vector<VarietyPoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].coords != b[k].coords || a[k].region != b[k].region) return false;
    return true;
}

int failures = 0;

void row(const char* name, double serial, double parallel, bool identical) {
    if (!identical) ++failures;
    std::printf("%-22s %10.2f %10.2f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                identical ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    std::printf("threads: %d, reps: %d\n", omp_get_max_threads(), reps);
    std::printf("%-22s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

    const ModelTriple neil = neil_triple();
    GridSpec grid;
    grid.radii = 16;
    grid.angles = 48;
    {
        std::vector<VarietyPoint> s, p;
        const double ts = time_ms([&] { s = sample_points(neil, grid, 7, 1e-8, kEpsTorus, Exec::serial); }, reps);
        const double tp = time_ms([&] { p = sample_points(neil, grid, 7, 1e-8, kEpsTorus, Exec::parallel); }, reps);
        row("sample_points neil", ts, tp, same_points(s, p));
    }

    Rng rng(11);
    const Matrix a = random_unitary(8, rng) * Matrix::Random(8, 8);
    {
        double s = 0, p = 0;
        const double ts = time_ms([&] { s = numerical_radius(a, 1e-10, Exec::serial); }, reps * 10);
        const double tp = time_ms([&] { p = numerical_radius(a, 1e-10, Exec::parallel); }, reps * 10);
        row("numerical_radius 8x8", ts, tp, s == p);
    }

    const RationalInnerFn psi = RationalInnerFn::create(random_colligation(3, 4, rng));
    {
        const auto nodes = kernel_nodes(40, 3);
        KernelFrame s, p;
        const double ts = time_ms([&] { s = kernel_frame(psi, nodes, kRankTol, Exec::serial); }, reps);
        const double tp = time_ms([&] { p = kernel_frame(psi, nodes, kRankTol, Exec::parallel); }, reps);
        row("kernel_frame 40 nodes", ts, tp, s.gram == p.gram && s.rank == p.rank);
    }
    {
        BivariatePoly s, p;
        const double ts = time_ms([&] { s = xi_extract(psi, 1e-8, Exec::serial); }, reps);
        const double tp = time_ms([&] { p = xi_extract(psi, 1e-8, Exec::parallel); }, reps);
        row("xi_extract (3,4)", ts, tp, s.coeffs == p.coeffs);
    }
    {
        NuSweep s, p;
        const double ts = time_ms([&] { s = nu_sweep(psi, grid, kCompatMargin, Exec::serial); }, reps);
        const double tp = time_ms([&] { p = nu_sweep(psi, grid, kCompatMargin, Exec::parallel); }, reps);
        row("nu_sweep (3,4)", ts, tp, s.max_nu == p.max_nu && s.argmax == p.argmax);
    }
    return failures == 0 ? 0 : 1;
}
