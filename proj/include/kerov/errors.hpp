#pragma once

#include <stdexcept>
#include <string>

namespace kerov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t n_minima, std::size_t n_maxima)
        : Error("length mismatch: " + std::to_string(n_minima) + " minima vs " +
                std::to_string(n_maxima) + " maxima (need |minima| = |maxima| + 1 >= 1)") {}
};

// index is 1-based: the j-th interlacing inequality pair (x_j >= y_j >= x_{j+1}) failed.
struct InterlacingViolation : Error {
    int index;
    double gap;
    InterlacingViolation(int index_, double gap_)
        : Error("interlacing violated at j=" + std::to_string(index_) + " by gap " +
                std::to_string(gap_)),
          index(index_), gap(gap_) {}
};

struct NonpositiveScale : Error {
    explicit NonpositiveScale(double s)
        : Error("rescale factor must be positive, got " + std::to_string(s)) {}
};

struct AlphaOutOfRange : Error {
    explicit AlphaOutOfRange(double alpha)
        : Error("alpha must be >= 1, got " + std::to_string(alpha)) {}
};

struct EdgeSingularity : Error {
    explicit EdgeSingularity(double t)
        : Error("density diverges at support endpoint t = " + std::to_string(t)) {}
};

struct OrderTooSmall : Error {
    explicit OrderTooSmall(int n)
        : Error("matrix order " + std::to_string(n) + " too small (need >= 2)") {}
};

// row is the 0-based tridiagonal row whose off-diagonal failed to deflate;
// trial is the simulation trial that hit it, or -1 outside a simulation.
struct NoConvergence : Error {
    int row;
    int trial;
    explicit NoConvergence(int row_)
        : Error("eigensolver failed to deflate row " + std::to_string(row_) +
                " within the sweep budget"),
          row(row_), trial(-1) {}
    NoConvergence(int row_, int trial_)
        : Error("eigensolver failed to deflate row " + std::to_string(row_) +
                " within the sweep budget (trial " + std::to_string(trial_) + ")"),
          row(row_), trial(trial_) {}
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct BranchPoint : Error {
    BranchPoint(double z, double alpha)
        : Error("G_alpha radicand nonpositive at z = " + std::to_string(z) +
                ", alpha = " + std::to_string(alpha) +
                " (branch point at z = 1/(sqrt(alpha)+1)^2)") {}
};

struct OracleMismatch : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace kerov
