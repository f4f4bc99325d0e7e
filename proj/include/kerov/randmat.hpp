#pragma once

#include <cstdint>

#include "kerov/linalg.hpp"
#include "kerov/rng.hpp"

namespace kerov {

/** Mean-0 variance-1 entry laws with all moments finite. */
enum class EntryDist { gaussian, rademacher, uniform_scaled };

const char* to_string(EntryDist dist);

/** One variate.  rademacher: +1 iff uniform01 < 1/2; uniform_scaled: sqrt(3)(2u - 1). */
double draw_entry(Xoshiro256pp& gen, EntryDist dist);

/** round(alpha n) with ties (x.5) rounded up, so M(N)/N -> alpha. */
int m_of_n(int n, double alpha);

/**
 * Symmetric matrix with i.i.d. entries from dist on and above the diagonal
 * (the diagonal uses the same unit-variance law as off-diagonals).  Draw order
 * is row-major over the upper triangle: (0,0), (0,1), ..., (1,1), (1,2), ...
 * Fully determined by rng.
 */
SymMatrix sample_wigner(int n, EntryDist dist, RngSpec rng);

/**
 * Y = W W^T for the n x M factor with M = m_of_n(n, alpha), i.i.d. entries
 * drawn row-major.  Positive semidefinite up to rounding; deterministic in rng.
 */
SymMatrix sample_wishart(int n, double alpha, EntryDist dist, RngSpec rng, int jobs = 1);

}  // namespace kerov
