#include "deglag/special.hpp"

#include <cmath>
#include <stdexcept>

namespace deglag::special {

MultiPoly falling_lambda(const MultiPoly& base, unsigned n) {
    MultiPoly r(1);
    const MultiPoly lam = MultiPoly::symbol(Sym::lambda);
    for (unsigned j = 0; j < n; ++j)
        r = r * (base - MultiPoly(BigRat(static_cast<long>(j))) * lam);
    return r;
}

MultiPoly rising_factorial_poly(unsigned n) {
    MultiPoly r(1);
    const MultiPoly x = MultiPoly::symbol(Sym::x);
    for (unsigned j = 0; j < n; ++j) r = r * (x + MultiPoly(static_cast<long>(j)));
    return r;
}

MultiPoly falling_factorial_poly(unsigned n) {
    MultiPoly r(1);
    const MultiPoly x = MultiPoly::symbol(Sym::x);
    for (unsigned j = 0; j < n; ++j) r = r * (x - MultiPoly(static_cast<long>(j)));
    return r;
}

BigInt lah(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("lah: k > n");
    if (n == 0) return 1;  // lah(0,0), the empty-sum convention
    if (k == 0) return 0;
    BigInt r = binomial(n - 1, k - 1) * factorial(n);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), factorial(k).get_mpz_t());
    return q;
}

LahTriangle::LahTriangle(unsigned n_max) : n_max_(n_max), rows_(n_max + 1) {
    rows_[0] = {BigInt(1)};
    for (unsigned n = 0; n < n_max; ++n) {
        auto& next = rows_[n + 1];
        next.assign(n + 2, BigInt(0));
        for (unsigned k = 0; k <= n + 1; ++k) {
            if (k >= 1) next[k] += rows_[n][k - 1];
            if (k <= n) next[k] += BigInt(n + k) * rows_[n][k];
        }
    }
}

const BigInt& LahTriangle::operator()(unsigned n, unsigned k) const {
    if (n > n_max_ || k > n) throw std::invalid_argument("LahTriangle: index out of range");
    return rows_[n][k];
}

TruncSeries deg_exp_series(const MultiPoly& exponent, unsigned order) {
    TruncSeries s(Var::t, order);
    for (unsigned k = 0; k <= order; ++k)
        s.set_coeff(k, falling_lambda(exponent, k) * BigRat(BigInt(1), factorial(k)));
    return s;
}

double deg_exp_eval(double x, double t, double lambda) {
    if (lambda == 0.0) return std::exp(x * t);
    const double w = 1.0 + lambda * t;
    if (w <= 0.0) throw std::domain_error("deg_exp_eval: requires 1 + lambda*t > 0");
    return std::pow(w, x / lambda);
}

double falling_lambda_num(double base, unsigned n, double lambda) {
    double r = 1.0;
    for (unsigned j = 0; j < n; ++j) r *= base - static_cast<double>(j) * lambda;
    return r;
}

}  // namespace deglag::special
