#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "kerov/kernels.hpp"
#include "kerov/rng.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        const double ms =
            std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        best = std::min(best, ms);
    }
    return best;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

void fill(std::vector<double>& v, std::uint64_t stream) {
    kerov::Xoshiro256pp gen({12345, stream});
    for (auto& x : v) x = gen.normal();
}

void report(const char* name, double serial_ms, double omp_ms, double diff) {
    std::printf("%-12s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, omp_ms,
                serial_ms / omp_ms, diff == 0.0 ? "bitwise-equal" : "DIFFERS");
}

}  // namespace

int main() {
    const int jobs = omp_get_max_threads();
    std::printf("kernel benchmark: serial vs OpenMP (%d threads), best of 3\n\n", jobs);
    std::printf("%-12s %13s %13s %9s   %s\n", "kernel", "serial", "omp", "speedup", "outputs");

    {
        const int n = 500, m = 1125;
        std::vector<double> W(std::size_t(n) * m);
        fill(W, 0);
        std::vector<double> Y1(std::size_t(n) * n), Y2(Y1.size());
        const double ts = best_of(3, [&] { kerov::kernels::gram_serial(W.data(), n, m, Y1.data()); });
        const double tp =
            best_of(3, [&] { kerov::kernels::gram_omp(W.data(), n, m, Y2.data(), jobs); });
        report("gram", ts, tp, max_abs_diff(Y1, Y2));
    }
    {
        const int n = 500;
        std::vector<double> A(std::size_t(n) * n), B(A.size());
        fill(A, 1);
        fill(B, 2);
        std::vector<double> C1(A.size()), C2(A.size());
        const double ts =
            best_of(3, [&] { kerov::kernels::matmul_serial(A.data(), B.data(), n, C1.data()); });
        const double tp = best_of(
            3, [&] { kerov::kernels::matmul_omp(A.data(), B.data(), n, C2.data(), jobs); });
        report("matmul", ts, tp, max_abs_diff(C1, C2));
    }
    {
        const int n = 500;
        std::vector<double> M(std::size_t(n) * n);
        kerov::Xoshiro256pp gen({777, 0});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                const double v = gen.normal();
                M[std::size_t(i) * n + j] = v;
                M[std::size_t(j) * n + i] = v;
            }
        std::vector<double> A1, A2;
        std::vector<double> d1(static_cast<std::size_t>(n));
        std::vector<double> e1 = d1, d2 = d1, e2 = d1;
        const double ts = best_of(3, [&] {
            A1 = M;
            kerov::kernels::householder_serial(A1.data(), n, d1.data(), e1.data());
        });
        const double tp = best_of(3, [&] {
            A2 = M;
            kerov::kernels::householder_omp(A2.data(), n, d2.data(), e2.data(), jobs);
        });
        double diff = std::max(max_abs_diff(d1, d2), max_abs_diff(e1, e2));
        report("householder", ts, tp, diff);
    }
    {
        const double lo = -3.0, hi = 3.0, step = 6.0 / 20'000'000.0;
        auto f1 = [](double t) { return std::fabs(t); };
        auto f2 = [](double t) { return 0.5 * t * t; };
        double m1 = 0.0, m2 = 0.0;
        const double ts = best_of(
            3, [&] { m1 = kerov::kernels::grid_max_abs_diff_serial(f1, f2, lo, hi, step); });
        const double tp = best_of(
            3, [&] { m2 = kerov::kernels::grid_max_abs_diff_omp(f1, f2, lo, hi, step, jobs); });
        report("grid-scan", ts, tp, std::fabs(m1 - m2));
    }
    return 0;
}
