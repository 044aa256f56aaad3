#pragma once

#include <vector>

#include "deglag/series.hpp"

namespace deglag::laguerre {

/// A degenerate generalized Laguerre polynomial: fully symbolic in x, lambda,
/// alpha, with x-degree exactly n.
struct LaguerrePoly {
    unsigned n = 0;
    MultiPoly poly;
    friend bool operator==(const LaguerrePoly&, const LaguerrePoly&) = default;
};

/// Explicit construction: the x^m coefficient is
/// binom(n+alpha, n-m) * (-1)^m * (1)_{m,lambda} / m!.
LaguerrePoly explicit_poly(unsigned n);

/// Independent generating-function route: expands the product of the
/// alpha-binomial series (1-t)^-(alpha+1) with the degenerate exponential
/// composed with -x t/(1-t), through t^N, using series inversion and Cauchy
/// products only.
std::vector<LaguerrePoly> gf_expand(unsigned N);

/// Gamma-function evaluation route:
/// Gamma(n+alpha+1)/Gamma(n+1) * sum_m (1)_{m,lambda} C(n,m) (-x)^m / Gamma(m+alpha+1),
/// computed through log-gamma with sign tracking. Throws std::domain_error
/// when some alpha+m+1 (0 <= m <= n) is a nonpositive integer.
double gamma_form_eval(unsigned n, double alpha, double lambda, double x);

/// Pole-free numeric evaluation by the explicit sum with product-form
/// binomials; valid for any real alpha.
double eval_double(unsigned n, double alpha, double lambda, double x);

/// The alpha = -1 family by the Lah route:
/// (1/n!) sum_{k=0}^{n} (-x)^k (1)_{k,lambda} L(n,k), a polynomial in x, lambda.
MultiPoly theorem4_poly(unsigned n);

/// Coefficient sequence of A(t) * e_lambda(-x t/(1-t)) through t^N for an
/// invertible series A with x-free coefficients. Requires A known through
/// order N and A(0) != 0 (std::invalid_argument otherwise).
std::vector<MultiPoly> seq_from_A(const TruncSeries& A, unsigned N);

enum class DerivForm { three_term, lah_sum };

/// Right-hand side of the derivative recurrences for a sequence generated by
/// an invertible A(t):
///   three_term: (1 + x*lambda) y'_{n-1} - y_{n-1}; `lower` = {y_{n-1}, y'_{n-1}}
///   lah_sum:    -sum_{k=1}^{n} sum_{l=1}^{k} x^{l-1} lambda^{l-1} C(k-1,k-l) y_{n-k};
///               `lower` = {y_0, ..., y_{n-1}}
/// Callers compare the result against d/dx y_n. Throws std::invalid_argument
/// on insufficient lower-order data (or n = 0).
MultiPoly deriv_recurrence_rhs(unsigned n, const std::vector<MultiPoly>& lower, DerivForm form);

/// Exact residual of the Rodrigues-type identity for integer alpha >= 0,
/// cleared of denominators: with E = e_lambda(-x) as a series in x,
///   d^n/dx^n[E * x^(n+alpha)] * (1-lambda x)^n
///   - n! * E * x^alpha * sum_m c_m x^m (1-lambda x)^(n-m),
/// where c_m is the x^m coefficient of the degree-n polynomial at that alpha.
/// The returned series in x over lambda-polynomials is identically zero iff
/// the identity holds through order N. Requires N >= n + alpha + 4.
TruncSeries rodrigues_residual(unsigned n, unsigned alpha_int, unsigned N);

}  // namespace deglag::laguerre
