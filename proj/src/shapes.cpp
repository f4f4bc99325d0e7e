#include "kerov/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace kerov {

namespace {
constexpr double pi = std::numbers::pi;
}

double omega(double t) {
    const double a = std::fabs(t);
    if (a >= 2.0) return a;
    return (2.0 / pi) * (t * std::asin(t / 2.0) + std::sqrt(4.0 - t * t));
}

std::pair<double, double> support(double alpha) {
    if (!(alpha >= 1.0)) throw AlphaOutOfRange(alpha);
    const double sa = std::sqrt(alpha);
    return {(sa - 1.0) * (sa - 1.0), (sa + 1.0) * (sa + 1.0)};
}

double omega_alpha(double t, double alpha) {
    const auto [lo, hi] = support(alpha);
    if (t <= lo || t >= hi) return std::fabs(t - alpha);
    if (alpha == 1.0) {
        const double u = t - 2.0;
        const double rad = std::sqrt(std::max(0.0, 4.0 - u * u));
        return (u * std::asin(u / 2.0) + rad) / pi + t / 2.0;
    }
    const double sa = std::sqrt(alpha);
    const double R = std::max(0.0, 2.0 * alpha + 2.0 * t - 1.0 - (t - alpha) * (t - alpha));
    const double sR = std::sqrt(R);
    const double asin_arg = std::clamp((alpha + 1.0 - t) / (2.0 * sa), -1.0, 1.0);
    const double am1 = alpha - 1.0;
    const double atan_term = std::atan2(am1 * am1 - t * (alpha + 1.0), am1 * sR);
    return ((2.0 * alpha - t) * std::asin(asin_arg) - t * atan_term + sR) / pi;
}

double omega_alpha_density(double t, double alpha) {
    const auto [lo, hi] = support(alpha);
    if (t == lo || t == hi) throw EdgeSingularity(t);
    if (t < lo || t > hi) return 0.0;
    const double rad = 4.0 * alpha - (t - alpha - 1.0) * (t - alpha - 1.0);
    return (t + alpha - 1.0) / (pi * t * std::sqrt(rad));
}

LimitShape LimitShape::wishart(double alpha) {
    if (!(alpha >= 1.0)) throw AlphaOutOfRange(alpha);
    return {Kind::wishart, alpha};
}

double LimitShape::evaluate(double t) const {
    return kind == Kind::vkls ? omega(t) : omega_alpha(t, alpha);
}

std::pair<double, double> LimitShape::support_interval() const {
    return kind == Kind::vkls ? std::pair{-2.0, 2.0} : support(alpha);
}

ContinualDiagram LimitShape::to_continual() const {
    ContinualDiagram c;
    const auto [lo, hi] = support_interval();
    c.lo = lo;
    c.hi = hi;
    c.center = center();
    const LimitShape self = *this;
    c.evaluator = [self](double t) { return self.evaluate(t); };
    return c;
}

namespace {

// Cumulative integral of f sampled on a uniform grid of odd size with pitch h:
// Simpson pairs at even indices, a 3-point Newton-Cotes half-panel at odd ones.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> F(n, 0.0);
    for (std::size_t i = 2; i < n; i += 2)
        F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (std::size_t i = 1; i < n; i += 2)
        F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    return F;
}

// Integrand of the curvature mass in theta:  density(x) dx = g(theta) dtheta with
// g = (x + alpha - 1)/(pi x); the sqrt singularities cancel against dx/dtheta.
double mass_integrand(double theta, double alpha, double lo_exact) {
    const double sa = std::sqrt(alpha);
    double x = (alpha + 1.0) + 2.0 * sa * std::sin(theta);
    if (alpha == 1.0 && x <= 0.0) return 1.0 / pi;  // limit of (x + 0)/(pi x)
    x = std::max(x, lo_exact);
    return (x + alpha - 1.0) / (pi * x);
}

}  // namespace

ContinualDiagram reconstruct_from_density(double alpha, int grid_n) {
    const auto [lo, hi] = support(alpha);
    if (grid_n < 100) throw Error("reconstruct_from_density: grid_n must be >= 100");
    if (grid_n % 2 == 0) ++grid_n;
    const std::size_t n = std::size_t(grid_n);
    const double h = pi / double(grid_n - 1);
    const double sa = std::sqrt(alpha);

    std::vector<double> x(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = -pi / 2.0 + double(i) * h;
        x[i] = (alpha + 1.0) + 2.0 * sa * std::sin(theta);
        g[i] = mass_integrand(theta, alpha, lo);
    }
    x.front() = lo;
    x.back() = hi;

    // slope(theta) = slope(left edge) + integral of g; the alpha = 1 atom at the
    // left edge (x = 0) lifts the starting slope from -1 to 0.
    const double slope0 = (alpha == 1.0) ? 0.0 : -1.0;
    std::vector<double> slope = cumulative_integral(g, h);
    for (auto& s : slope) s += slope0;

    // value integrand in theta: w'(x) dx/dtheta
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = -pi / 2.0 + double(i) * h;
        v[i] = slope[i] * 2.0 * sa * std::cos(theta);
    }
    std::vector<double> w = cumulative_integral(v, h);
    const double w0 = std::fabs(lo - alpha);
    for (auto& val : w) val += w0;

    ContinualDiagram c;
    c.center = alpha;
    c.lo = lo;
    c.hi = hi;
    const double center = alpha;
    c.evaluator = [xs = std::move(x), ws = std::move(w), lo = lo, hi = hi, center](double t) {
        if (t <= lo || t >= hi) return std::fabs(t - center);
        const auto it = std::upper_bound(xs.begin(), xs.end(), t);
        const std::size_t k = std::size_t(it - xs.begin());  // xs[k-1] <= t < xs[k]
        const double u = (t - xs[k - 1]) / (xs[k] - xs[k - 1]);
        return ws[k - 1] + u * (ws[k] - ws[k - 1]);
    };
    return c;
}

double density_total_mass(double alpha, int grid_n) {
    const auto [lo, hi] = support(alpha);
    (void)hi;
    if (grid_n < 3) throw Error("density_total_mass: grid_n must be >= 3");
    if (grid_n % 2 == 0) ++grid_n;
    const double h = pi / double(grid_n - 1);
    double s = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double theta = -pi / 2.0 + double(i) * h;
        const double w = (i == 0 || i == grid_n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * mass_integrand(theta, alpha, lo);
    }
    double mass = s * h / 3.0;
    if (alpha == 1.0) mass += 1.0;  // the unit atom at 0
    return mass;
}

}  // namespace kerov
