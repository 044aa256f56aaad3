#include "deglag/poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "deglag/rng.hpp"

namespace deglag::poisson {

namespace {

constexpr std::size_t kTermCap = 1000000;

double pmf_zero(const DegPoissonParams& p) {
    if (p.lambda == 0.0) return std::exp(-p.alpha);
    return std::pow(1.0 + p.lambda * p.alpha, -1.0 / p.lambda);
}

// pmf(k+1) / pmf(k)
double pmf_ratio(unsigned k, const DegPoissonParams& p) {
    return p.alpha * (1.0 - k * p.lambda) / (k + 1.0);
}

// Ordinary falling factorial x(x-1)...(x-n+1) of an integer draw.
double falling_of_draw(std::uint64_t x, unsigned n) {
    double v = 1.0;
    for (unsigned i = 0; i < n; ++i) v *= static_cast<double>(x) - i;
    return v;
}

}  // namespace

void validate(const DegPoissonParams& p) {
    if (!(p.alpha > 0.0)) throw std::domain_error("degenerate Poisson: requires alpha > 0");
    if (!(1.0 + p.alpha * p.lambda > 0.0))
        throw std::domain_error("degenerate Poisson: requires 1 + alpha*lambda > 0");
}

void validate_sampling(const DegPoissonParams& p) {
    validate(p);
    if (p.lambda > 0.0)
        throw std::domain_error(
            "degenerate Poisson: sampling and summation require lambda <= 0");
}

double pmf(unsigned k, const DegPoissonParams& p) {
    validate_sampling(p);
    double v = pmf_zero(p);
    for (unsigned i = 0; i < k; ++i) v *= pmf_ratio(i, p);
    return v;
}

std::vector<std::uint64_t> sample(const DegPoissonParams& p, std::uint64_t seed,
                                  std::size_t count) {
    validate_sampling(p);
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = rng.next_unit();
        double pk = pmf_zero(p);
        double cdf = pk;
        std::uint64_t k = 0;
        while (cdf <= u && k < kTermCap) {
            pk *= pmf_ratio(static_cast<unsigned>(k), p);
            cdf += pk;
            ++k;
        }
        out.push_back(k);
    }
    return out;
}

double moment_exact(unsigned n, const DegPoissonParams& p) {
    validate(p);
    double v = 1.0;
    for (unsigned i = 0; i < n; ++i)
        v *= p.alpha * (1.0 - i * p.lambda) / (1.0 + p.alpha * p.lambda);
    return v;
}

double moment_series(unsigned n, const DegPoissonParams& p, double tol) {
    validate_sampling(p);
    // Walk the pmf recurrence up to k = n, where (k)_n first becomes nonzero.
    double pk = pmf_zero(p);
    for (unsigned k = 0; k < n; ++k) pk *= pmf_ratio(k, p);
    // t = (k)_n pmf(k); at k = n the falling factorial is n!.
    double t = pk;
    for (unsigned i = 2; i <= n; ++i) t *= i;
    double sum = t;
    // Term ratio t_{k+1}/t_k = alpha (1 - k lambda) / (k + 1 - n); for
    // lambda <= 0 it decreases toward |alpha*lambda| < 1, so once below 1 the
    // tail is bounded by the geometric series t * rho / (1 - rho).
    for (std::size_t steps = 0; steps < kTermCap; ++steps) {
        const unsigned k = n + static_cast<unsigned>(steps);
        const double rho = p.alpha * (1.0 - k * p.lambda) / (k + 1.0 - n);
        if (rho < 1.0 && t * rho / (1.0 - rho) < tol) return sum;
        t *= rho;
        sum += t;
    }
    throw std::runtime_error("moment_series: no convergence within the term cap");
}

McEstimate moment_mc(unsigned n, const DegPoissonParams& p, std::size_t count,
                     std::uint64_t seed) {
    validate_sampling(p);
    if (count == 0) throw std::invalid_argument("moment_mc: count must be positive");
    const std::vector<std::uint64_t> draws = sample(p, seed, count);
    double mean = 0.0;
    for (std::uint64_t d : draws) mean += falling_of_draw(d, n);
    mean /= static_cast<double>(count);
    double var = 0.0;
    for (std::uint64_t d : draws) {
        const double delta = falling_of_draw(d, n) - mean;
        var += delta * delta;
    }
    var = count > 1 ? var / (static_cast<double>(count) - 1.0) : 0.0;
    McEstimate e;
    e.estimate = mean;
    e.std_error = std::sqrt(var / static_cast<double>(count));
    return e;
}

}  // namespace deglag::poisson
