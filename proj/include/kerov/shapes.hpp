#pragma once

#include <utility>

#include "kerov/diagram.hpp"

namespace kerov {

/** Vershik-Kerov-Logan-Shepp curve: (2/pi)(t asin(t/2) + sqrt(4 - t^2)) on [-2,2], |t| outside. */
double omega(double t);

/** Support of the Wishart limit shape: ((sqrt(alpha)-1)^2, (sqrt(alpha)+1)^2).  alpha >= 1. */
std::pair<double, double> support(double alpha);

/**
 * Wishart limit shape Omega_alpha, center alpha, |t - alpha| at and outside the
 * support.  On the open support, for alpha > 1:
 *
 *   (1/pi) [ (2a - t) asin((a + 1 - t)/(2 sqrt a))
 *            - t atan(((a-1)^2 - t(a+1)) / ((a-1) sqrt R))
 *            + sqrt R ],      R = 2a + 2t - 1 - (t - a)^2
 *
 * and for alpha = 1, on (0, 4):
 *
 *   ((t-2) asin(t/2 - 1) + sqrt(4 - (t-2)^2)) / pi + t/2.
 *
 * Both forms are pinned by the reconstruct_from_density oracle below: they are
 * the unique sign/factor readings that are continuous at the edges and agree
 * with double integration of the density to ~1e-10.
 */
double omega_alpha(double t, double alpha);

/**
 * Continuous part of the curvature Omega''_alpha:
 * (t + alpha - 1) / (pi t sqrt(4 alpha - (t - alpha - 1)^2)) strictly inside
 * the support, 0 outside; throws EdgeSingularity exactly at an endpoint.
 * At alpha = 1 the curvature measure additionally carries a unit atom at 0
 * (the continuous part then integrates to 1, not 2); reconstruct_from_density
 * and density_total_mass account for it.
 */
double omega_alpha_density(double t, double alpha);

struct WishartDensity {
    double alpha = 1.0;
    double operator()(double t) const { return omega_alpha_density(t, alpha); }
};

struct LimitShape {
    enum class Kind { vkls, wishart };
    Kind kind = Kind::vkls;
    double alpha = 1.0;

    static LimitShape vkls() { return {Kind::vkls, 1.0}; }
    static LimitShape wishart(double alpha);

    double evaluate(double t) const;
    double center() const { return kind == Kind::vkls ? 0.0 : alpha; }
    std::pair<double, double> support_interval() const;
    ContinualDiagram to_continual() const;
};

/**
 * Independent oracle for the closed form: integrates the density twice under
 * the substitution t = (alpha+1) + 2 sqrt(alpha) sin(theta) (which removes the
 * edge singularities) with cumulative Simpson rules on grid_n points
 * (grid_n >= 100, forced odd).  Boundary conditions: value |edge - alpha| at
 * the left edge and slope -1 there, plus the unit atom at 0 when alpha = 1.
 * Returns a sampled piecewise-linear diagram.
 */
ContinualDiagram reconstruct_from_density(double alpha, int grid_n = 4001);

/** Total curvature mass: integral of the density plus the alpha = 1 atom; should be 2. */
double density_total_mass(double alpha, int grid_n = 20001);

}  // namespace kerov
