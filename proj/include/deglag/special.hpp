#pragma once

#include <vector>

#include "deglag/series.hpp"

namespace deglag::special {

/// prod_{j=0}^{n-1} (base - j*lambda), the lambda-falling factorial of `base`.
/// For base = 1 this is (1)_{n,lambda}.
MultiPoly falling_lambda(const MultiPoly& base, unsigned n);

/// x(x+1)...(x+n-1), degree n in x.
MultiPoly rising_factorial_poly(unsigned n);
/// x(x-1)...(x-n+1), degree n in x.
MultiPoly falling_factorial_poly(unsigned n);

/// Lah number via the closed form C(n-1,k-1) * n!/k!; lah(0,0) = 1 and
/// lah(n,0) = 0 for n >= 1. Throws std::invalid_argument when k > n.
BigInt lah(unsigned n, unsigned k);

/// Lah triangle built by the recurrence L(n+1,k) = L(n,k-1) + (n+k) L(n,k),
/// precomputable once and shared read-only.
class LahTriangle {
public:
    explicit LahTriangle(unsigned n_max);
    unsigned n_max() const { return n_max_; }
    const BigInt& operator()(unsigned n, unsigned k) const;

private:
    unsigned n_max_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Series in t whose t^k coefficient is falling_lambda(exponent, k) / k!.
/// For exponent 1 this is the degenerate exponential e_lambda(t).
TruncSeries deg_exp_series(const MultiPoly& exponent, unsigned order);

/// Closed form e_lambda^x(t) = (1 + lambda t)^(x/lambda), continued across
/// lambda = 0 as exp(x t). Throws std::domain_error when 1 + lambda t <= 0.
double deg_exp_eval(double x, double t, double lambda);

/// Numeric lambda-falling factorial prod_{j=0}^{n-1} (base - j*lambda).
double falling_lambda_num(double base, unsigned n, double lambda);

}  // namespace deglag::special
