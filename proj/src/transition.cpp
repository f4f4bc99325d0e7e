#include "kerov/transition.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kerov/moments.hpp"

namespace kerov {

PTildeSeq vkls_ptilde(int k_max) {
    PTildeSeq p;
    p.values.reserve(std::size_t(k_max));
    for (int k = 1; k <= k_max; ++k) p.values.emplace_back(wigner_limit_moment(k));
    return p;
}

TransitionMoments semicircle_moments(int k_max) {
    if (k_max < 0 || k_max > 30)
        throw BoundExceeded("semicircle_moments bound is k_max = 30, got " +
                            std::to_string(k_max));
    TransitionMoments mu;
    mu.values.resize(std::size_t(k_max) + 1, Rational(0));
    for (int l = 0; 2 * l <= k_max; ++l) mu.values[std::size_t(2 * l)] = Rational(catalan(l));
    return mu;
}

double mp_moment_quadrature(int k, double alpha, int grid_n) {
    // x = (alpha+1) + 2 sqrt(alpha) sin(theta) turns the density integral into
    // (2 alpha / pi) * int_{-pi/2}^{pi/2} x^{k-1} cos^2(theta) dtheta, smooth in theta.
    if (grid_n % 2 == 0) ++grid_n;
    const double pi = std::numbers::pi;
    const double sa = std::sqrt(alpha);
    const double h = pi / double(grid_n - 1);
    double s = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double theta = -pi / 2.0 + double(i) * h;
        const double x = (alpha + 1.0) + 2.0 * sa * std::sin(theta);
        const double c = std::cos(theta);
        double xp = 1.0;
        for (int j = 0; j < k - 1; ++j) xp *= x;
        const double w = (i == 0 || i == grid_n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * xp * c * c;
    }
    return 2.0 * alpha / pi * (s * h / 3.0);
}

TransitionMomentsAlpha mp_moments_symbolic(int k_max) {
    if (k_max < 0 || k_max > 20)
        throw BoundExceeded("mp_moments bound is k_max = 20, got " + std::to_string(k_max));
    TransitionMomentsAlpha mu;
    mu.values.resize(std::size_t(k_max) + 1);
    mu.values[0] = AlphaPolyQ::constant(1);
    for (int k = 1; k <= k_max; ++k) {
        AlphaPoly pk;
        for (int r = 1; r <= k; ++r) pk.add_term(r, narayana(k, r));
        mu.values[std::size_t(k)] = AlphaPolyQ::from(pk);
    }
    // dual-oracle protocol: the combinatorial formula is not trusted until the
    // quadrature oracle agrees at two pinned parameter values
    for (const double alpha : {1.0, 2.25}) {
        for (int k = 1; k <= k_max; ++k) {
            double narayana_value = 0.0;
            const auto& poly = mu.values[std::size_t(k)].coeffs;
            for (std::size_t i = poly.size(); i-- > 0;)
                narayana_value = narayana_value * alpha + poly[i].convert_to<double>();
            const double quad = mp_moment_quadrature(k, alpha);
            const double scale = std::max(std::fabs(narayana_value), std::fabs(quad));
            if (std::fabs(narayana_value - quad) > 1e-7 * scale)
                throw OracleMismatch("MP moment oracles disagree at k = " + std::to_string(k) +
                                     ", alpha = " + std::to_string(alpha) + ": " +
                                     std::to_string(narayana_value) + " vs " +
                                     std::to_string(quad));
        }
    }
    return mu;
}

TransitionMoments mp_moments(int k_max, const Rational& alpha) {
    const TransitionMomentsAlpha sym = mp_moments_symbolic(k_max);
    TransitionMoments mu;
    mu.values.reserve(sym.values.size());
    for (const auto& poly : sym.values) {
        Rational v = 0;
        for (std::size_t i = poly.coeffs.size(); i-- > 0;) v = v * alpha + poly.coeffs[i];
        mu.values.push_back(v);
    }
    return mu;
}

}  // namespace kerov
