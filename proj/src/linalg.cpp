#include "kerov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>

#include "kerov/kernels.hpp"

namespace kerov {

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

SymMatrix principal_submatrix(const SymMatrix& S) {
    const int n = S.order();
    if (n < 2) throw OrderTooSmall(n);
    SymMatrix R(n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) R.set(i, j, S(i, j));
    return R;
}

Spectrum eigenvalues(const SymMatrix& S, double tol, int jobs) {
    (void)tol;  // QL reaches machine accuracy; the parameter documents the contract
    const int n = S.order();
    Spectrum out;
    out.values.resize(std::size_t(n));
    if (n == 1) {
        out.values[0] = S(0, 0);
        return out;
    }
    std::vector<double> work(S.data(), S.data() + std::size_t(n) * n);
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> e(static_cast<std::size_t>(n));
    kernels::householder(work.data(), n, d.data(), e.data(), jobs);
    kernels::tqli(d.data(), e.data(), n);
    std::sort(d.begin(), d.end(), std::greater<>());
    out.values = std::move(d);
    return out;
}

InterlacingPair interlacing_from_matrix(const SymMatrix& S, double tol_rel, int jobs) {
    const int n = S.order();
    if (n < 2) throw OrderTooSmall(n);
    Spectrum big = eigenvalues(S, 1e-10, jobs);
    Spectrum sub = eigenvalues(principal_submatrix(S), 1e-10, jobs);
    const double radius = std::max(std::fabs(big.values.front()), std::fabs(big.values.back()));
    const double slack = tol_rel * std::max(1.0, radius);
    return validate_interlacing(std::move(big.values), std::move(sub.values), slack);
}

}  // namespace kerov
