#pragma once

#include <vector>

#include "kerov/errors.hpp"
#include "kerov/exact.hpp"
#include "kerov/poly.hpp"

namespace kerov {

/** Exact truncated power series c_0..c_K. */
struct RationalSeries {
    std::vector<Rational> coeffs;
    int order() const { return int(coeffs.size()) - 1; }
};

/** p~_1..p~_K; values[k-1] holds p~_k.  R is Rational or AlphaPolyQ. */
template <class R>
struct PTildeSeqT {
    std::vector<R> values;
    int order() const { return int(values.size()); }
};

/** mu_0..mu_K with mu_0 = 1; values[k] holds mu_k. */
template <class R>
struct TransitionMomentsT {
    std::vector<R> values;
    int order() const { return int(values.size()) - 1; }
};

using PTildeSeq = PTildeSeqT<Rational>;
using PTildeSeqAlpha = PTildeSeqT<AlphaPolyQ>;
using TransitionMoments = TransitionMomentsT<Rational>;
using TransitionMomentsAlpha = TransitionMomentsT<AlphaPolyQ>;

namespace detail {

inline Rational ring_one(const Rational*) { return Rational(1); }
inline AlphaPolyQ ring_one(const AlphaPolyQ*) { return AlphaPolyQ::constant(1); }
inline Rational div_int(const Rational& x, int k) { return x / k; }
inline AlphaPolyQ div_int(const AlphaPolyQ& x, int k) { return x.scaled(Rational(1, k)); }
inline Rational mul_int(const Rational& x, int k) { return x * k; }
inline AlphaPolyQ mul_int(const AlphaPolyQ& x, int k) { return x.scaled(Rational(k)); }

}  // namespace detail

/**
 * The transition-measure moments of a diagram with moment sequence p~:
 * 1 + sum mu_k z^k = exp(sum p~_k z^k / k), computed by the differential
 * recurrence k mu_k = sum_{j=1..k} p~_j mu_{k-j} in O(K^2) exact operations.
 */
template <class R>
TransitionMomentsT<R> p_to_moments(const PTildeSeqT<R>& p) {
    const int K = p.order();
    TransitionMomentsT<R> mu;
    mu.values.resize(std::size_t(K) + 1);
    mu.values[0] = detail::ring_one(static_cast<const R*>(nullptr));
    for (int k = 1; k <= K; ++k) {
        R acc{};
        for (int j = 1; j <= k; ++j)
            acc = acc + p.values[std::size_t(j - 1)] * mu.values[std::size_t(k - j)];
        mu.values[std::size_t(k)] = detail::div_int(acc, k);
    }
    return mu;
}

/** Formal-logarithm inverse: p~_k = k mu_k - sum_{j<k} p~_j mu_{k-j}.  Needs mu_0 = 1. */
template <class R>
PTildeSeqT<R> moments_to_p(const TransitionMomentsT<R>& mu) {
    if (mu.values.empty() || !(mu.values[0] == detail::ring_one(static_cast<const R*>(nullptr))))
        throw Error("moments_to_p: mu_0 must be 1");
    const int K = mu.order();
    PTildeSeqT<R> p;
    p.values.resize(std::size_t(K));
    for (int k = 1; k <= K; ++k) {
        R acc = detail::mul_int(mu.values[std::size_t(k)], k);
        for (int j = 1; j < k; ++j)
            acc = acc - p.values[std::size_t(j - 1)] * mu.values[std::size_t(k - j)];
        p.values[std::size_t(k - 1)] = acc;
    }
    return p;
}

/** p~_k of the VKLS curve: 0 for odd k, k!/((k/2)!)^2 for even (equals the Wigner limits). */
PTildeSeq vkls_ptilde(int k_max);

/** Semicircle moments: mu_{2l} = Catalan(l), odd moments 0.  k_max <= 30. */
TransitionMoments semicircle_moments(int k_max);

/**
 * Marchenko-Pastur moments as exact polynomials in alpha:
 * mu_k = sum_r Narayana(k, r) alpha^r.  Before returning, the polynomials are
 * cross-validated against numerical integration of the MP density at
 * alpha in {1, 2.25} (relative 1e-7); disagreement throws OracleMismatch.
 * k_max <= 20.
 */
TransitionMomentsAlpha mp_moments_symbolic(int k_max);

/** The symbolic polynomials evaluated at an exact rational alpha. */
TransitionMoments mp_moments(int k_max, const Rational& alpha);

/**
 * Independent MP oracle: mu_k = integral of x^k sqrt((hi-x)(x-lo))/(2 pi x) dx
 * over the support, via the edge-regularizing substitution
 * x = (alpha+1) + 2 sqrt(alpha) sin(theta) and composite Simpson.
 */
double mp_moment_quadrature(int k, double alpha, int grid_n = 32769);

}  // namespace kerov
