#include "kerov/moments.hpp"

#include <cmath>
#include <string>

#include "kerov/kernels.hpp"

namespace kerov {

BigInt wigner_limit_moment(int k) {
    if (k < 1) throw Error("wigner_limit_moment: k must be >= 1");
    if (k % 2 == 1) return 0;
    const BigInt half = factorial(k / 2);
    return factorial(k) / (half * half);
}

namespace {

void dyck_rec(DyckPath& path, int ups_left, int height,
              const std::function<void(const DyckPath&)>& fn) {
    if (ups_left == 0 && height == 0) {
        fn(path);
        return;
    }
    if (ups_left > 0) {
        path.steps.push_back(+1);
        dyck_rec(path, ups_left - 1, height + 1, fn);
        path.steps.pop_back();
    }
    if (height > 0) {
        path.steps.push_back(-1);
        dyck_rec(path, ups_left, height - 1, fn);
        path.steps.pop_back();
    }
}

}  // namespace

void for_each_dyck(int l, const std::function<void(const DyckPath&)>& fn) {
    if (l < 1) throw Error("for_each_dyck: l must be >= 1");
    if (l > 14) throw BoundExceeded("dyck enumeration bound is l = 14, got l = " + std::to_string(l));
    DyckPath path;
    path.steps.reserve(std::size_t(2 * l));
    dyck_rec(path, l, 0, fn);
}

std::vector<DyckPath> enumerate_dyck(int l) {
    std::vector<DyckPath> out;
    for_each_dyck(l, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

std::pair<int, int> dyck_stats(const DyckPath& path) {
    int a = 0, b = 0, height = 0;
    for (signed char s : path.steps) {
        if (s == -1) {
            (height % 2 == 1 ? a : b) += 1;
            --height;
        } else {
            ++height;
        }
    }
    return {a, b};
}

AlphaPoly wishart_moment_oracle(int k) {
    AlphaPoly m;
    for_each_dyck(k, [&](const DyckPath& p) {
        const auto [a, b] = dyck_stats(p);
        m.add_term(a, BigInt(b + 1));
    });
    return m;
}

std::vector<AlphaBetaPoly> d_series(int r_max) {
    if (r_max < 0 || r_max > 20)
        throw BoundExceeded("d_series bound is r_max = 20, got " + std::to_string(r_max));
    std::vector<AlphaBetaPoly> d(std::size_t(r_max) + 1);
    d[0] = AlphaBetaPoly::one();
    const AlphaBetaPoly a = AlphaBetaPoly::alpha();
    const AlphaBetaPoly b = AlphaBetaPoly::beta();
    for (int r = 1; r <= r_max; ++r) {
        AlphaBetaPoly first_returns;
        for (int j = 2; j <= r; ++j)
            first_returns = first_returns + d[std::size_t(r - j)] * d[std::size_t(j - 1)];
        d[std::size_t(r)] = b * first_returns + a * d[std::size_t(r - 1)];
    }
    return d;
}

std::vector<AlphaPoly> m_from_beta_derivative(int k_max) {
    if (k_max < 0 || k_max > 20)
        throw BoundExceeded("m_from_beta_derivative bound is k_max = 20, got " +
                            std::to_string(k_max));
    const auto d = d_series(k_max);
    std::vector<AlphaPoly> m(std::size_t(k_max) + 1);
    m[0] = AlphaPoly::constant(1);
    for (int k = 1; k <= k_max; ++k)
        m[std::size_t(k)] = d[std::size_t(k)].at_beta_one() + d[std::size_t(k)].d_beta().at_beta_one();
    return m;
}

double g_alpha_closed_form(double z, double alpha) {
    if (!(alpha >= 1.0)) throw AlphaOutOfRange(alpha);
    const double am1 = alpha - 1.0;
    const double radicand = am1 * am1 * z * z - 2.0 * (alpha + 1.0) * z + 1.0;
    if (radicand <= 0.0) throw BranchPoint(z, alpha);
    return 0.5 * (1.0 + (am1 * z + 1.0) / std::sqrt(radicand));
}

namespace {

double trace_power(const SymMatrix& S, int k, int jobs) {
    const int n = S.order();
    if (n == 0) return 0.0;
    if (k == 1) return S.trace();
    std::vector<double> P(S.data(), S.data() + std::size_t(n) * n);
    std::vector<double> next(std::size_t(n) * n);
    for (int i = 2; i <= k; ++i) {
        kernels::matmul(P.data(), S.data(), n, next.data(), jobs);
        std::swap(P, next);
    }
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += P[std::size_t(i) * n + i];
    return t;
}

}  // namespace

double trace_power_difference(const SymMatrix& S, int k, int jobs) {
    if (k < 1 || k > 6)
        throw BoundExceeded("trace_power_difference: k must be in 1..6, got " + std::to_string(k));
    if (S.order() > 64)
        throw BoundExceeded("trace_power_difference: order bound is 64, got " +
                            std::to_string(S.order()));
    if (S.order() == 1) return ipow(S(0, 0), k);
    const SymMatrix sub = principal_submatrix(S);
    return trace_power(S, k, jobs) - trace_power(sub, k, jobs);
}

}  // namespace kerov
