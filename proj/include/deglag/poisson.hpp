#pragma once

#include <cstdint>
#include <vector>

namespace deglag::poisson {

/// Parameters of the degenerate Poisson law with mass
/// p(i) = e_lambda(alpha)^(-1) alpha^i (1)_{i,lambda} / i!.
/// Finiteness needs alpha > 0 and 1 + alpha*lambda > 0; the masses are a
/// genuine probability distribution only for lambda <= 0, so sampling and
/// series summation additionally require that.
struct DegPoissonParams {
    double alpha = 1.0;
    double lambda = 0.0;
};

/// Throws std::domain_error unless alpha > 0 and 1 + alpha*lambda > 0.
void validate(const DegPoissonParams& p);
/// validate() plus lambda <= 0.
void validate_sampling(const DegPoissonParams& p);

/// P{X = k}, by the recurrence pmf(k+1) = pmf(k) * alpha (1 - k lambda)/(k+1)
/// seeded at pmf(0) = (1 + lambda alpha)^(-1/lambda) (exp(-alpha) at lambda=0).
/// Requires sampling-valid params.
double pmf(unsigned k, const DegPoissonParams& p);

/// Inverse-CDF draws, deterministic per (seed, count). A hard per-draw cap of
/// 10^6 on k guards pathological inputs; a draw that reaches it returns the cap.
std::vector<std::uint64_t> sample(const DegPoissonParams& p, std::uint64_t seed,
                                  std::size_t count);

/// Falling-factorial moment E[(X)_n] in closed form:
/// alpha^n (1)_{n,lambda} (1 + alpha lambda)^(-n). Accepts any lambda with
/// 1 + alpha*lambda > 0 (a formal value when lambda > 0).
double moment_exact(unsigned n, const DegPoissonParams& p);

/// Same moment by direct summation sum_k (k)_n pmf(k), stopping once a
/// geometric tail bound drops below tol. Requires sampling-valid params;
/// throws std::runtime_error if 10^6 terms do not suffice.
double moment_series(unsigned n, const DegPoissonParams& p, double tol);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of E[(X)_n]: mean and standard error of (X)_n over
/// `count` draws with the given seed.
McEstimate moment_mc(unsigned n, const DegPoissonParams& p, std::size_t count,
                     std::uint64_t seed);

}  // namespace deglag::poisson
