#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kerov/errors.hpp"
#include "kerov/exact.hpp"
#include "kerov/linalg.hpp"
#include "kerov/moments.hpp"
#include "support/oracles.hpp"

using namespace kerov;

TEST_CASE("exact helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(catalan(0) == 1);
    CHECK(catalan(5) == 42);
    CHECK(catalan(10) == 16796);
    CHECK(narayana(4, 2) == 6);
    CHECK(narayana(6, 1) == 1);
    CHECK(narayana(6, 6) == 1);
}

TEST_CASE("wigner limit moments") {
    CHECK(wigner_limit_moment(1) == 0);
    CHECK(wigner_limit_moment(2) == 2);
    CHECK(wigner_limit_moment(4) == 6);
    CHECK(wigner_limit_moment(6) == 20);
    CHECK(wigner_limit_moment(8) == 70);
    CHECK(wigner_limit_moment(10) == 252);
    CHECK(wigner_limit_moment(12) == 924);
    CHECK(wigner_limit_moment(7) == 0);
    CHECK_THROWS_AS(wigner_limit_moment(0), Error);
}

TEST_CASE("Dyck paths enumerate to Catalan counts") {
    for (int l = 1; l <= 7; ++l) {
        const auto paths = enumerate_dyck(l);
        CHECK(BigInt(paths.size()) == catalan(l));
        for (const auto& p : paths) {
            int h = 0;
            for (signed char s : p.steps) {
                h += s;
                CHECK(h >= 0);
            }
            CHECK(h == 0);
        }
    }
    CHECK_THROWS_AS(enumerate_dyck(0), Error);
    CHECK_THROWS_AS(enumerate_dyck(15), BoundExceeded);
}

TEST_CASE("down-step height statistics split l between a and b") {
    for (const auto& p : enumerate_dyck(5)) {
        const auto [a, b] = dyck_stats(p);
        CHECK(a + b == 5);
    }
}

TEST_CASE("Dyck oracle gives the m_k polynomials") {
    CHECK(wishart_moment_oracle(1) == AlphaPoly::alpha());
    CHECK(wishart_moment_oracle(2).to_string() == "alpha^2 + 2*alpha");
    CHECK(wishart_moment_oracle(3).to_string() == "alpha^3 + 6*alpha^2 + 3*alpha");
    CHECK_THROWS_AS(wishart_moment_oracle(0), Error);
}

TEST_CASE("d-series recurrence") {
    const auto d = d_series(12);
    CHECK(d[0] == AlphaBetaPoly::one());
    CHECK(d[1] == AlphaBetaPoly::alpha());
    // d_2 = alpha^2 + alpha beta
    CHECK(d[2] == AlphaBetaPoly::alpha() * AlphaBetaPoly::alpha() +
                      AlphaBetaPoly::alpha() * AlphaBetaPoly::beta());
    // beta = alpha collapses to the Catalan-weighted diagonal
    for (int r = 0; r <= 12; ++r) {
        AlphaPoly want = AlphaPoly::constant(catalan(r));
        for (int i = 0; i < r; ++i) want = want * AlphaPoly::alpha();
        CHECK(d[std::size_t(r)].at_beta_alpha() == want);
    }
    CHECK_THROWS_AS(d_series(21), BoundExceeded);
}

TEST_CASE("beta-derivative route equals the Dyck oracle") {
    const auto beta_route = m_from_beta_derivative(10);
    for (int k = 1; k <= 10; ++k)
        CHECK(wishart_moment_oracle(k) == beta_route[std::size_t(k)]);
}

TEST_CASE("closed-form G_alpha") {
    CHECK(g_alpha_closed_form(0.0, 2.25) == 1.0);
    CHECK(g_alpha_closed_form(0.05, 1.0) ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(0.8))).epsilon(1e-15));
    CHECK_THROWS_AS(g_alpha_closed_form(0.0, 0.5), AlphaOutOfRange);
    // branch point at z = 1/(sqrt(alpha)+1)^2
    CHECK_THROWS_AS(g_alpha_closed_form(0.25, 1.0), BranchPoint);
    CHECK_THROWS_AS(g_alpha_closed_form(0.30, 1.0), BranchPoint);
}

TEST_CASE("G_alpha matches its power series") {
    // truncation at k = 12 leaves a tail below 5e-8 at z = 0.3 / (sqrt(alpha)+1)^2
    const auto m = m_from_beta_derivative(12);
    for (double a : {1.0, 2.0, 2.25, 4.0}) {
        const double z = 0.3 / std::pow(std::sqrt(a) + 1.0, 2);
        double series = 0.0;
        for (int k = 12; k >= 1; --k) series = (series + m[std::size_t(k)].eval(a)) * z;
        series += 1.0;
        CHECK(std::fabs(g_alpha_closed_form(z, a) - series) <= 5e-8);
    }
}

TEST_CASE("trace_power_difference") {
    SymMatrix D(3);
    D.set(0, 0, 1.0);
    D.set(1, 1, 2.0);
    D.set(2, 2, 3.0);
    CHECK(trace_power_difference(D, 2) == 9.0);  // (1+4+9) - (1+4)
    CHECK(trace_power_difference(D, 1) == 3.0);
    CHECK_THROWS_AS(trace_power_difference(D, 0), Error);
    CHECK_THROWS_AS(trace_power_difference(D, 7), Error);
    SymMatrix one(1);
    one.set(0, 0, -2.0);
    CHECK(trace_power_difference(one, 3) == -8.0);
    SymMatrix big(65);
    CHECK_THROWS_AS(trace_power_difference(big, 2), BoundExceeded);
}

TEST_CASE("tilde_p equals the trace power difference") {
    for (int trial = 0; trial < 10; ++trial) {
        const SymMatrix S = oracles::random_symmetric(8, 2024, std::uint64_t(trial));
        const auto pair = interlacing_from_matrix(S);
        for (int k = 1; k <= 6; ++k) {
            const double via_traces = trace_power_difference(S, k);
            const double via_diagram = tilde_p(pair, k);
            const double scale = std::max({1.0, std::fabs(via_traces), std::fabs(via_diagram)});
            CHECK(std::fabs(via_traces - via_diagram) / scale <= 1e-6);
        }
    }
}
