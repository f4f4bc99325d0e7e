#pragma once

#include <functional>
#include <vector>

#include "kerov/errors.hpp"

namespace kerov {

/** Descending x_1 >= y_1 >= x_2 >= ... >= y_{n-1} >= x_n.  Build through validate_interlacing. */
struct InterlacingPair {
    std::vector<double> minima;  // x_1 >= ... >= x_n, n >= 1
    std::vector<double> maxima;  // y_1 >= ... >= y_{n-1}

    int n() const { return int(minima.size()); }
};

/**
 * Sorts both lists descending and checks every interlacing inequality.
 * A violation within `tol` is repaired by clamping the offending y to the
 * nearer x; a larger one throws InterlacingViolation(j, gap) with 1-based j.
 */
InterlacingPair validate_interlacing(std::vector<double> minima, std::vector<double> maxima,
                                     double tol = 0.0);

/**
 * The rectangular Young diagram of an interlacing pair: the unique piecewise
 * linear function with slopes +-1 whose local minima are the x_i and local
 * maxima the y_j, equal to |t - center| far away.
 */
struct RectDiagram {
    InterlacingPair pair;
    double center = 0.0;  // sum of minima - sum of maxima

    /** w(t) = sum_i |t - x_i| - sum_j |t - y_j| (the closed form works everywhere). */
    double evaluate(double t) const;
};

RectDiagram build_diagram(const InterlacingPair& pair);

/** Any 1-Lipschitz function equal to |t - center| at and beyond [lo, hi]. */
struct ContinualDiagram {
    std::function<double(double)> evaluator;
    double center = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> breakpoints;  // candidate extrema for sup scans; may be empty

    double operator()(double t) const { return evaluator(t); }
};

ContinualDiagram as_continual(const RectDiagram& d);

/** t -> d(s t)/s; center, support and breakpoints divide by s.  s > 0. */
ContinualDiagram rescale(const ContinualDiagram& d, double s);

/**
 * Max of |a(t) - b(t)| over both breakpoint sets, both support endpoint pairs,
 * and a uniform grid of pitch grid_step covering the union of supports padded
 * by one step.  By 1-Lipschitz continuity the true sup exceeds the reported
 * value by at most grid_step.
 */
double sup_distance(const ContinualDiagram& a, const ContinualDiagram& b,
                    double grid_step = 1e-3);

/** Same scan restricted to an explicit window [wlo, whi]; jobs > 1 parallelizes the grid. */
double sup_distance_window(const ContinualDiagram& a, const ContinualDiagram& b,
                           double grid_step, double wlo, double whi, int jobs = 1);

/** p~_k = sum_i x_i^k - sum_j y_j^k, k >= 1 (the atom at 0 contributes nothing). */
double tilde_p(const InterlacingPair& pair, int k);

/** Atoms of sigma'': +1 at each x_i; -1 at each y_j and at the fixed point 0. */
struct SigmaAtoms {
    std::vector<double> positive_atoms;
    std::vector<double> negative_atoms;  // the y_j, then the fixed atom at 0 appended last
};

SigmaAtoms sigma_atoms(const InterlacingPair& pair);

/** x^k by repeated multiplication, k >= 0 (exact operation order, no libm). */
double ipow(double x, int k);

}  // namespace kerov
