#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "kerov/exact.hpp"
#include "kerov/linalg.hpp"
#include "kerov/poly.hpp"

namespace kerov {

/** 0 for odd k; the central binomial k!/((k/2)!)^2 for even k.  Exact. */
BigInt wigner_limit_moment(int k);

/** Nonnegative +-1 walk from 0 back to 0; steps.size() = 2l. */
struct DyckPath {
    std::vector<signed char> steps;
};

/** Visit every Dyck path of semilength l once, in lexicographic order (up before down). */
void for_each_dyck(int l, const std::function<void(const DyckPath&)>& fn);

/** Materialized enumeration; l <= 14 (Catalan growth), BoundExceeded above. */
std::vector<DyckPath> enumerate_dyck(int l);

/** (a, b): down-steps taken from odd / even height (height before the step); a + b = l. */
std::pair<int, int> dyck_stats(const DyckPath& path);

/** m_k = sum over Dyck paths of semilength k of (b + 1) alpha^a.  k <= 14. */
AlphaPoly wishart_moment_oracle(int k);

/**
 * First-return recurrence d_r = beta sum_{j=2..r} d_{r-j} d_{j-1} + alpha d_{r-1},
 * d_0 = 1; returns d_0..d_r_max exactly.  r_max <= 20.
 */
std::vector<AlphaBetaPoly> d_series(int r_max);

/**
 * m_k extracted termwise from the beta-derivative of beta d(z) at beta = 1:
 * m_k = d_k|_{beta=1} + (d/dbeta d_k)|_{beta=1}.  Returns index 0..k_max with
 * m_0 = 1 (the constant term of the generating function).  k_max <= 20.
 */
std::vector<AlphaPoly> m_from_beta_derivative(int k_max);

/**
 * G_alpha(z) = (1/2)(1 + ((alpha-1)z + 1)/sqrt((alpha-1)^2 z^2 - 2(alpha+1)z + 1));
 * requires the radicand to be positive (z below the branch point 1/(sqrt(alpha)+1)^2).
 */
double g_alpha_closed_form(double z, double alpha);

/** trace(S^k) - trace(S-hat^k) by direct matrix powers; k <= 6, order <= 64. */
double trace_power_difference(const SymMatrix& S, int k, int jobs = 1);

}  // namespace kerov
