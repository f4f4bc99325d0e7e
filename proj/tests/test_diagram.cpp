#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kerov/diagram.hpp"
#include "kerov/errors.hpp"

using namespace kerov;

TEST_CASE("validate_interlacing accepts and sorts") {
    // deliberately unsorted input
    const auto pair = validate_interlacing({1.0, 3.0}, {2.0}, 0.0);
    CHECK(pair.minima == std::vector<double>{3.0, 1.0});
    CHECK(pair.maxima == std::vector<double>{2.0});
}

TEST_CASE("validate_interlacing length rules") {
    CHECK_THROWS_AS(validate_interlacing({}, {}, 0.0), LengthMismatch);
    CHECK_THROWS_AS(validate_interlacing({1.0}, {0.5}, 0.0), LengthMismatch);
    CHECK_THROWS_AS(validate_interlacing({3.0, 1.0}, {}, 0.0), LengthMismatch);
    CHECK_NOTHROW(validate_interlacing({1.0}, {}, 0.0));
}

TEST_CASE("validate_interlacing clamps within tol") {
    // y_1 pokes above x_1 by 1e-9: legal under tol 1e-8, clamped onto x_1
    const auto pair = validate_interlacing({3.0, 1.0}, {3.0 + 1e-9}, 1e-8);
    CHECK(pair.maxima[0] == 3.0);
    // and below x_2 on the other side
    const auto pair2 = validate_interlacing({3.0, 1.0}, {1.0 - 1e-9}, 1e-8);
    CHECK(pair2.maxima[0] == 1.0);
}

TEST_CASE("validate_interlacing reports the violated index and gap") {
    try {
        validate_interlacing({3.0, 1.0}, {4.0}, 1e-8);
        FAIL("expected InterlacingViolation");
    } catch (const InterlacingViolation& e) {
        CHECK(e.index == 1);
        CHECK(e.gap == doctest::Approx(1.0));
    }
    // y_1 < x_2 violates the second inequality of pair j=1
    CHECK_THROWS_AS(validate_interlacing({3.0, 1.0}, {0.0}, 1e-8), InterlacingViolation);
}

TEST_CASE("build_diagram center and evaluation") {
    const auto pair = validate_interlacing({3.0, 1.0}, {2.0}, 0.0);
    const auto d = build_diagram(pair);
    CHECK(d.center == 2.0);  // 3 + 1 - 2, exact
    CHECK(d.evaluate(1.0) == 1.0);
    CHECK(d.evaluate(2.0) == 2.0);
    CHECK(d.evaluate(3.0) == 1.0);
    // |t - center| outside the support
    CHECK(d.evaluate(10.0) == 8.0);
    CHECK(d.evaluate(-5.0) == 7.0);
}

TEST_CASE("diagram is 1-Lipschitz") {
    const auto d = build_diagram(validate_interlacing({4.0, 1.5, -2.0}, {3.0, 0.0}, 0.0));
    const double h = 1e-3;
    double worst = 0.0;
    for (double t = -4.0; t < 6.0; t += h)
        worst = std::max(worst, std::fabs(d.evaluate(t + h) - d.evaluate(t)));
    CHECK(worst <= h + 1e-12);  // slack for rounding inside evaluate
}

TEST_CASE("tilde_p moments") {
    const auto pair = validate_interlacing({3.0, 1.0}, {2.0}, 0.0);
    CHECK(tilde_p(pair, 1) == 2.0);  // equals the center
    CHECK(tilde_p(pair, 2) == 6.0);  // 9 + 1 - 4
    CHECK(tilde_p(pair, 3) == 20.0);
    CHECK_THROWS_AS(tilde_p(pair, 0), Error);
    CHECK_THROWS_AS(tilde_p(pair, -3), Error);
}

TEST_CASE("as_continual mirrors the diagram") {
    const auto pair = validate_interlacing({3.0, 1.0}, {2.0}, 0.0);
    const auto d = build_diagram(pair);
    const auto c = as_continual(d);
    CHECK(c.center == d.center);
    CHECK(c.lo == 1.0);
    CHECK(c.hi == 3.0);
    CHECK(c.breakpoints.size() == 3);
    for (double t : {-2.0, 0.5, 1.7, 2.0, 2.9, 8.0}) CHECK(c(t) == d.evaluate(t));
}

TEST_CASE("rescale") {
    const auto c = as_continual(build_diagram(validate_interlacing({3.0, 1.0}, {2.0}, 0.0)));
    const auto r = rescale(c, 2.0);
    CHECK(r.center == 1.0);
    CHECK(r.lo == 0.5);
    CHECK(r.hi == 1.5);
    CHECK(r(1.0) == 1.0);       // c(2)/2
    CHECK(r(10.0) == 9.0);      // |10 - 1|
    CHECK_THROWS_AS(rescale(c, 0.0), NonpositiveScale);
    CHECK_THROWS_AS(rescale(c, -1.0), NonpositiveScale);
}

TEST_CASE("sup_distance between a three-corner diagram and |t|") {
    // w(t) = |t-1| + |t+1| - |t| sits 2 above |t| at the origin
    const auto d = as_continual(build_diagram(validate_interlacing({1.0, -1.0}, {0.0}, 0.0)));
    ContinualDiagram abs_t;
    abs_t.evaluator = [](double t) { return std::fabs(t); };
    abs_t.center = 0.0;
    abs_t.lo = 0.0;
    abs_t.hi = 0.0;
    CHECK(sup_distance(d, abs_t) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sup_distance(d, d) == 0.0);
}

TEST_CASE("sup_distance_window agrees across jobs") {
    const auto a = as_continual(build_diagram(validate_interlacing({2.5, 0.5}, {1.0}, 0.0)));
    const auto b = as_continual(build_diagram(validate_interlacing({2.0, 1.0}, {1.5}, 0.0)));
    const double s1 = sup_distance_window(a, b, 1e-4, -1.0, 4.0, 1);
    const double s4 = sup_distance_window(a, b, 1e-4, -1.0, 4.0, 4);
    CHECK(s1 == s4);  // bitwise
    CHECK(s1 > 0.0);
}

TEST_CASE("sigma_atoms") {
    const auto pair = validate_interlacing({3.0, 1.0}, {2.0}, 0.0);
    const auto atoms = sigma_atoms(pair);
    CHECK(atoms.positive_atoms == std::vector<double>{3.0, 1.0});
    CHECK(atoms.negative_atoms == std::vector<double>{2.0, 0.0});
}

TEST_CASE("ipow") {
    CHECK(ipow(2.0, 0) == 1.0);
    CHECK(ipow(2.0, 10) == 1024.0);
    CHECK(ipow(-3.0, 3) == -27.0);
}
