#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "kerov/errors.hpp"
#include "kerov/kernels.hpp"
#include "kerov/rng.hpp"

using namespace kerov;

namespace {

std::vector<double> randoms(std::size_t count, std::uint64_t stream) {
    Xoshiro256pp gen({31415, stream});
    std::vector<double> v(count);
    for (auto& x : v) x = gen.normal();
    return v;
}

}  // namespace

TEST_CASE("gram serial and omp agree bitwise") {
    for (auto [n, m] : {std::pair{1, 1}, {3, 7}, {17, 5}, {33, 71}}) {
        const auto W = randoms(std::size_t(n) * m, std::uint64_t(n));
        std::vector<double> a(std::size_t(n) * n), b(a), c(a);
        kernels::gram_serial(W.data(), n, m, a.data());
        kernels::gram_omp(W.data(), n, m, b.data(), 4);
        kernels::gram(W.data(), n, m, c.data(), 3);
        CHECK(a == b);
        CHECK(a == c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(a[std::size_t(i) * n + j] == a[std::size_t(j) * n + i]);
    }
}

TEST_CASE("gram computes W W^T") {
    // W = [[1,2],[3,4]] -> Y = [[5,11],[11,25]]
    const std::vector<double> W = {1, 2, 3, 4};
    std::vector<double> Y(4);
    kernels::gram_serial(W.data(), 2, 2, Y.data());
    CHECK(Y == std::vector<double>{5, 11, 11, 25});
}

TEST_CASE("matmul serial and omp agree bitwise") {
    for (int n : {1, 2, 13, 40}) {
        const auto A = randoms(std::size_t(n) * n, 100 + std::uint64_t(n));
        const auto B = randoms(std::size_t(n) * n, 200 + std::uint64_t(n));
        std::vector<double> c1(std::size_t(n) * n), c2(c1);
        kernels::matmul_serial(A.data(), B.data(), n, c1.data());
        kernels::matmul_omp(A.data(), B.data(), n, c2.data(), 4);
        CHECK(c1 == c2);
    }
    const std::vector<double> A = {1, 2, 3, 4}, B = {5, 6, 7, 8};
    std::vector<double> C(4);
    kernels::matmul_serial(A.data(), B.data(), 2, C.data());
    CHECK(C == std::vector<double>{19, 22, 43, 50});
}

TEST_CASE("householder serial and omp agree bitwise") {
    for (int n : {2, 5, 24, 60}) {
        std::vector<double> M(std::size_t(n) * n);
        Xoshiro256pp gen({99, std::uint64_t(n)});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                const double v = gen.normal();
                M[std::size_t(i) * n + j] = v;
                M[std::size_t(j) * n + i] = v;
            }
        std::vector<double> A1 = M, A2 = M;
        std::vector<double> d1(static_cast<std::size_t>(n));
        std::vector<double> e1 = d1, d2 = d1, e2 = d1;
        kernels::householder_serial(A1.data(), n, d1.data(), e1.data());
        kernels::householder_omp(A2.data(), n, d2.data(), e2.data(), 4);
        CHECK(d1 == d2);
        CHECK(e1 == e2);
        // the reduction preserves the trace
        double tr = 0.0, td = 0.0;
        for (int i = 0; i < n; ++i) {
            tr += M[std::size_t(i) * n + i];
            td += d1[std::size_t(i)];
        }
        CHECK(td == doctest::Approx(tr).epsilon(1e-12));
    }
}

TEST_CASE("tqli solves the tridiagonal Toeplitz spectrum") {
    const int n = 10;
    std::vector<double> d(n, 2.0), e(n, -1.0);
    e[0] = 0.0;
    kernels::tqli(d.data(), e.data(), n);
    std::sort(d.begin(), d.end());
    for (int k = 1; k <= n; ++k) {
        const double want = 2.0 - 2.0 * std::cos(k * M_PI / (n + 1));
        CHECK(d[std::size_t(k) - 1] == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("tqli handles trivial inputs") {
    std::vector<double> d = {4.0}, e = {0.0};
    kernels::tqli(d.data(), e.data(), 1);
    CHECK(d[0] == 4.0);
    std::vector<double> d2 = {1.0, 1.0}, e2 = {0.0, 0.0};
    kernels::tqli(d2.data(), e2.data(), 2);
    CHECK(d2 == std::vector<double>{1.0, 1.0});
}

TEST_CASE("grid scan maxima agree across thread counts and include both ends") {
    auto f1 = [](double t) { return t; };
    auto f2 = [](double t) { return 0.0 * t; };
    // |f1 - f2| peaks at the right endpoint, which the scan must include
    const double serial = kernels::grid_max_abs_diff_serial(f1, f2, 0.0, 1.0, 0.3);
    CHECK(serial == 1.0);
    const double omp = kernels::grid_max_abs_diff_omp(f1, f2, 0.0, 1.0, 0.3, 4);
    CHECK(serial == omp);

    auto g1 = [](double t) { return std::sin(100.0 * t); };
    const double s = kernels::grid_max_abs_diff_serial(g1, f2, -3.0, 3.0, 1e-5);
    const double p = kernels::grid_max_abs_diff_omp(g1, f2, -3.0, 3.0, 1e-5, 8);
    CHECK(s == p);  // bitwise, despite the max reduction
    CHECK(s <= 1.0);
    CHECK(s > 0.9999);
}

TEST_CASE("degenerate scan windows") {
    auto f1 = [](double t) { return t * t; };
    auto f2 = [](double) { return 1.0; };
    CHECK(kernels::grid_max_abs_diff_serial(f1, f2, 2.0, 2.0, 0.5) == 3.0);  // single point
    CHECK(kernels::grid_max_abs_diff_omp(f1, f2, 2.0, 2.0, 0.5, 4) == 3.0);
}
