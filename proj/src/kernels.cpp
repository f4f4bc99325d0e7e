#include "kerov/kernels.hpp"

#include <cmath>
#include <limits>

#include "kerov/errors.hpp"

namespace kerov::kernels {

void gram_serial(const double* W, int n, int m, double* Y) {
    for (int i = 0; i < n; ++i) {
        const double* wi = W + std::size_t(i) * m;
        for (int j = i; j < n; ++j) {
            const double* wj = W + std::size_t(j) * m;
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += wi[k] * wj[k];
            Y[std::size_t(i) * n + j] = s;
            Y[std::size_t(j) * n + i] = s;
        }
    }
}

void gram_omp(const double* W, int n, int m, double* Y, int jobs) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int i = 0; i < n; ++i) {
        const double* wi = W + std::size_t(i) * m;
        for (int j = i; j < n; ++j) {
            const double* wj = W + std::size_t(j) * m;
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += wi[k] * wj[k];
            Y[std::size_t(i) * n + j] = s;
            Y[std::size_t(j) * n + i] = s;
        }
    }
}

void gram(const double* W, int n, int m, double* Y, int jobs) {
    if (jobs <= 1)
        gram_serial(W, n, m, Y);
    else
        gram_omp(W, n, m, Y, jobs);
}

void matmul_serial(const double* A, const double* B, int n, double* C) {
    for (int i = 0; i < n; ++i) {
        const double* ai = A + std::size_t(i) * n;
        double* ci = C + std::size_t(i) * n;
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += ai[k] * B[std::size_t(k) * n + j];
            ci[j] = s;
        }
    }
}

void matmul_omp(const double* A, const double* B, int n, double* C, int jobs) {
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (int i = 0; i < n; ++i) {
        const double* ai = A + std::size_t(i) * n;
        double* ci = C + std::size_t(i) * n;
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += ai[k] * B[std::size_t(k) * n + j];
            ci[j] = s;
        }
    }
}

void matmul(const double* A, const double* B, int n, double* C, int jobs) {
    if (jobs <= 1)
        matmul_serial(A, B, n, C);
    else
        matmul_omp(A, B, n, C, jobs);
}

namespace {

// Shared scalar steps of one Householder elimination row; the two O(i^2) loops
// (symmetric mat-vec and rank-2 update) are what the omp variant parallelizes.
inline double row_scale(const double* A, int i, int n) {
    double scale = 0.0;
    const double* ai = A + std::size_t(i) * n;
    for (int k = 0; k < i; ++k) scale += std::fabs(ai[k]);
    return scale;
}

inline double symv_row(const double* A, int n, int i, int j, int l) {
    // (A v)_j over the leading block, reading the lower triangle; v = row i of A
    const double* ai = A + std::size_t(i) * n;
    double g = 0.0;
    for (int k = 0; k <= j; ++k) g += A[std::size_t(j) * n + k] * ai[k];
    for (int k = j + 1; k <= l; ++k) g += A[std::size_t(k) * n + j] * ai[k];
    return g;
}

}  // namespace

void householder_serial(double* A, int n, double* d, double* e) {
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        double* ai = A + std::size_t(i) * n;
        if (l > 0) {
            const double scale = row_scale(A, i, n);
            if (scale == 0.0) {
                e[i] = ai[l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    ai[k] /= scale;
                    h += ai[k] * ai[k];
                }
                double f = ai[l];
                const double g0 = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g0;
                h -= f * g0;
                ai[l] = f - g0;
                for (int j = 0; j <= l; ++j) e[j] = symv_row(A, n, i, j, l) / h;
                f = 0.0;
                for (int j = 0; j <= l; ++j) f += e[j] * ai[j];
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) e[j] -= hh * ai[j];
                for (int j = 0; j <= l; ++j) {
                    const double fj = ai[j];
                    const double gj = e[j];
                    double* aj = A + std::size_t(j) * n;
                    for (int k = 0; k <= j; ++k) aj[k] -= fj * e[k] + gj * ai[k];
                }
            }
        } else {
            e[i] = ai[l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = A[std::size_t(i) * n + i];
}

void householder_omp(double* A, int n, double* d, double* e, int jobs) {
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        double* ai = A + std::size_t(i) * n;
        if (l > 0) {
            const double scale = row_scale(A, i, n);
            if (scale == 0.0) {
                e[i] = ai[l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    ai[k] /= scale;
                    h += ai[k] * ai[k];
                }
                double f = ai[l];
                const double g0 = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g0;
                h -= f * g0;
                ai[l] = f - g0;
#pragma omp parallel for schedule(static) num_threads(jobs)
                for (int j = 0; j <= l; ++j) e[j] = symv_row(A, n, i, j, l) / h;
                f = 0.0;  // serial reduction: summation order must not depend on threads
                for (int j = 0; j <= l; ++j) f += e[j] * ai[j];
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) e[j] -= hh * ai[j];
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
                for (int j = 0; j <= l; ++j) {
                    const double fj = ai[j];
                    const double gj = e[j];
                    double* aj = A + std::size_t(j) * n;
                    for (int k = 0; k <= j; ++k) aj[k] -= fj * e[k] + gj * ai[k];
                }
            }
        } else {
            e[i] = ai[l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = A[std::size_t(i) * n + i];
}

void householder(double* A, int n, double* d, double* e, int jobs) {
    if (jobs <= 1)
        householder_serial(A, n, d, e);
    else
        householder_omp(A, n, d, e, jobs);
}

void tqli(double* d, double* e, int n, int max_sweeps) {
    if (n <= 1) return;
    // shift to superdiagonal convention: e[i] couples d[i] and d[i+1]
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == max_sweeps) throw NoConvergence(l);
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace kerov::kernels
