#pragma once

#include <vector>

#include "kerov/diagram.hpp"
#include "kerov/errors.hpp"

namespace kerov {

/** Dense real symmetric matrix; set() mirrors writes so symmetry is exact by construction. */
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(std::size_t(n) * std::size_t(n), 0.0) {}

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[std::size_t(i) * n_ + j] = v;
        a_[std::size_t(j) * n_ + i] = v;
    }

    const double* data() const { return a_.data(); }

    /** Bulk-fill access; callers must write both triangles identically. */
    double* mutable_data() { return a_.data(); }

    double trace() const;
    double frobenius() const;

private:
    int n_;
    std::vector<double> a_;
};

/** Eigenvalues sorted descending; length equals the matrix order. */
struct Spectrum {
    std::vector<double> values;
};

/** The leading (n-1) x (n-1) block: drop the last row and column. */
SymMatrix principal_submatrix(const SymMatrix& S);

/**
 * All eigenvalues via Householder tridiagonalization + implicit-shift QL.
 * Achieved accuracy is machine-level: each value is within tol (1 + ||S||_F)
 * of a true eigenvalue for any tol >= ~1e-12.  Eigenvectors are never formed.
 * Throws NoConvergence(row) if a tridiagonal row fails to deflate in 50 sweeps.
 */
Spectrum eigenvalues(const SymMatrix& S, double tol = 1e-10, int jobs = 1);

/**
 * eigenvalues(S) as minima, eigenvalues of the principal submatrix as maxima,
 * clamped through validate_interlacing with absolute slack
 * tol_rel * max(1, spectral radius).  A violation beyond that signals an
 * eigensolver bug and propagates as InterlacingViolation.
 */
InterlacingPair interlacing_from_matrix(const SymMatrix& S, double tol_rel = 1e-8, int jobs = 1);

}  // namespace kerov
