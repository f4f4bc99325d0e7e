#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <omp.h>

namespace kerov::kernels {

// Every parallel kernel partitions work by *output element* and computes each
// element with the same serial inner loop as the reference implementation, so
// results are bitwise identical for any thread count.  Dispatchers take a
// `jobs` argument: jobs <= 1 runs the serial reference, jobs > 1 the OpenMP
// variant with that many threads.

/** Y = W W^T.  W is n x m row-major; Y is n x n row-major, exactly symmetric. */
void gram_serial(const double* W, int n, int m, double* Y);
void gram_omp(const double* W, int n, int m, double* Y, int jobs);
void gram(const double* W, int n, int m, double* Y, int jobs);

/** C = A B for n x n row-major matrices (C must not alias A or B). */
void matmul_serial(const double* A, const double* B, int n, double* C);
void matmul_omp(const double* A, const double* B, int n, double* C, int jobs);
void matmul(const double* A, const double* B, int n, double* C, int jobs);

/**
 * In-place Householder reduction of a symmetric matrix (n x n row-major, the
 * lower triangle is read) to tridiagonal form: diagonal in d[0..n-1],
 * subdiagonal in e[1..n-1] (e[0] = 0).  A is destroyed.
 */
void householder_serial(double* A, int n, double* d, double* e);
void householder_omp(double* A, int n, double* d, double* e, int jobs);
void householder(double* A, int n, double* d, double* e, int jobs);

/**
 * Eigenvalues of a symmetric tridiagonal matrix by the implicit-shift QL
 * iteration, in place into d (unordered).  e[0] is unused and e is destroyed.
 * An off-diagonal deflates when |e_i| <= eps (|d_i| + |d_{i+1}|).  Throws
 * NoConvergence(row) if a row needs more than max_sweeps implicit sweeps
 * (each sweep is at most n rotations).  Inherently sequential; serial only.
 */
void tqli(double* d, double* e, int n, int max_sweeps = 50);

/**
 * max over {lo + i*step : i = 0..floor((hi-lo)/step)} U {hi} of |f1(t) - f2(t)|.
 * Grid points are computed as lo + i*step (never accumulated), and max is
 * order-independent, so any partition gives identical results.
 */
template <class F1, class F2>
double grid_max_abs_diff_serial(F1&& f1, F2&& f2, double lo, double hi, double step) {
    const long n = std::max(0L, long(std::floor((hi - lo) / step)));
    double best = std::fabs(f1(hi) - f2(hi));
    for (long i = 0; i <= n; ++i) {
        const double t = lo + double(i) * step;
        best = std::max(best, std::fabs(f1(t) - f2(t)));
    }
    return best;
}

template <class F1, class F2>
double grid_max_abs_diff_omp(F1&& f1, F2&& f2, double lo, double hi, double step, int jobs) {
    const long n = std::max(0L, long(std::floor((hi - lo) / step)));
    double best = std::fabs(f1(hi) - f2(hi));
#pragma omp parallel num_threads(jobs)
    {
        double local = 0.0;
#pragma omp for nowait
        for (long i = 0; i <= n; ++i) {
            const double t = lo + double(i) * step;
            local = std::max(local, std::fabs(f1(t) - f2(t)));
        }
#pragma omp critical
        best = std::max(best, local);
    }
    return best;
}

template <class F1, class F2>
double grid_max_abs_diff(F1&& f1, F2&& f2, double lo, double hi, double step, int jobs) {
    if (jobs <= 1) return grid_max_abs_diff_serial(f1, f2, lo, hi, step);
    return grid_max_abs_diff_omp(f1, f2, lo, hi, step, jobs);
}

}  // namespace kerov::kernels
