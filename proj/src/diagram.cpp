#include "kerov/diagram.hpp"

#include <algorithm>
#include <cmath>

#include "kerov/kernels.hpp"

namespace kerov {

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

InterlacingPair validate_interlacing(std::vector<double> minima, std::vector<double> maxima,
                                     double tol) {
    if (minima.empty() || minima.size() != maxima.size() + 1)
        throw LengthMismatch(minima.size(), maxima.size());
    std::sort(minima.begin(), minima.end(), std::greater<>());
    std::sort(maxima.begin(), maxima.end(), std::greater<>());
    for (std::size_t j = 0; j < maxima.size(); ++j) {
        if (maxima[j] > minima[j]) {
            const double gap = maxima[j] - minima[j];
            if (gap > tol) throw InterlacingViolation(int(j) + 1, gap);
            maxima[j] = minima[j];
        }
        if (maxima[j] < minima[j + 1]) {
            const double gap = minima[j + 1] - maxima[j];
            if (gap > tol) throw InterlacingViolation(int(j) + 1, gap);
            maxima[j] = minima[j + 1];
        }
    }
    return InterlacingPair{std::move(minima), std::move(maxima)};
}

double tilde_p(const InterlacingPair& pair, int k) {
    if (k < 1) throw Error("tilde_p: k must be >= 1");
    double sx = 0.0;
    for (double x : pair.minima) sx += ipow(x, k);
    double sy = 0.0;
    for (double y : pair.maxima) sy += ipow(y, k);
    return sx - sy;
}

RectDiagram build_diagram(const InterlacingPair& pair) {
    return RectDiagram{pair, tilde_p(pair, 1)};
}

double RectDiagram::evaluate(double t) const {
    double s = 0.0;
    for (double x : pair.minima) s += std::fabs(t - x);
    for (double y : pair.maxima) s -= std::fabs(t - y);
    return s;
}

ContinualDiagram as_continual(const RectDiagram& d) {
    ContinualDiagram c;
    c.center = d.center;
    c.lo = d.pair.minima.back();   // x_n
    c.hi = d.pair.minima.front();  // x_1
    c.breakpoints = d.pair.minima;
    c.breakpoints.insert(c.breakpoints.end(), d.pair.maxima.begin(), d.pair.maxima.end());
    c.evaluator = [d](double t) { return d.evaluate(t); };
    return c;
}

ContinualDiagram rescale(const ContinualDiagram& d, double s) {
    if (!(s > 0.0)) throw NonpositiveScale(s);
    ContinualDiagram r;
    r.center = d.center / s;
    r.lo = d.lo / s;
    r.hi = d.hi / s;
    r.breakpoints.reserve(d.breakpoints.size());
    for (double b : d.breakpoints) r.breakpoints.push_back(b / s);
    r.evaluator = [d, s](double t) { return d.evaluator(s * t) / s; };
    return r;
}

double sup_distance_window(const ContinualDiagram& a, const ContinualDiagram& b,
                           double grid_step, double wlo, double whi, int jobs) {
    double best = 0.0;
    auto consider = [&](double t) {
        if (t < wlo || t > whi) return;
        best = std::max(best, std::fabs(a.evaluator(t) - b.evaluator(t)));
    };
    for (double t : a.breakpoints) consider(t);
    for (double t : b.breakpoints) consider(t);
    consider(a.lo);
    consider(a.hi);
    consider(b.lo);
    consider(b.hi);
    const double grid = kernels::grid_max_abs_diff(a.evaluator, b.evaluator, wlo, whi,
                                                   grid_step, jobs);
    return std::max(best, grid);
}

double sup_distance(const ContinualDiagram& a, const ContinualDiagram& b, double grid_step) {
    const double wlo = std::min(a.lo, b.lo) - grid_step;
    const double whi = std::max(a.hi, b.hi) + grid_step;
    return sup_distance_window(a, b, grid_step, wlo, whi, 1);
}

SigmaAtoms sigma_atoms(const InterlacingPair& pair) {
    SigmaAtoms s;
    s.positive_atoms = pair.minima;
    s.negative_atoms = pair.maxima;
    s.negative_atoms.push_back(0.0);
    return s;
}

}  // namespace kerov
