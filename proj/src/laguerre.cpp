#include "deglag/laguerre.hpp"

#include <cmath>
#include <stdexcept>

#include "deglag/special.hpp"

namespace deglag::laguerre {

namespace {

/// e_lambda(-x t/(1-t)) through t^N: the degenerate exponential coefficients
/// composed with u = -x t/(1-t), which has valuation 1 so the composition
/// truncates after N powers of u.
TruncSeries gf_exponential_factor(unsigned N) {
    TruncSeries one_minus_t = TruncSeries::unit(Var::t, N);
    TruncSeries minus_xt(Var::t, N);
    if (N >= 1) {
        one_minus_t.set_coeff(1, MultiPoly(-1));
        minus_xt.set_coeff(1, -MultiPoly::symbol(Sym::x));
    }
    const TruncSeries u = series_mul(series_inverse(one_minus_t), minus_xt);
    TruncSeries acc = TruncSeries::unit(Var::t, N);
    TruncSeries pw = TruncSeries::unit(Var::t, N);
    for (unsigned k = 1; k <= N; ++k) {
        pw = series_mul(pw, u);
        acc = acc + series_scale(pw, special::falling_lambda(MultiPoly(1), k) * BigRat(BigInt(1), factorial(k)));
    }
    return acc;
}

double binom_prod(double z, unsigned k) {
    double r = 1.0;
    for (unsigned j = 0; j < k; ++j) r *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
    return r;
}

/// log |Gamma(z)| with the sign of Gamma(z); z must not be a nonpositive integer.
std::pair<double, int> log_gamma_signed(double z) {
    if (z > 0.0) return {std::lgamma(z), 1};
    const int sign = (static_cast<long long>(std::floor(-z)) % 2 == 0) ? -1 : 1;
    return {std::lgamma(z), sign};
}

bool is_nonpositive_integer(double z) {
    return z <= 0.0 && z == std::floor(z);
}

}  // namespace

LaguerrePoly explicit_poly(unsigned n) {
    MultiPoly p;
    const MultiPoly x = MultiPoly::symbol(Sym::x);
    BigRat sign(1);
    for (unsigned m = 0; m <= n; ++m) {
        p += binom_poly(static_cast<long>(n), n - m) * special::falling_lambda(MultiPoly(1), m) *
             x.pow(m) * (sign * BigRat(BigInt(1), factorial(m)));
        sign = -sign;
    }
    return {n, std::move(p)};
}

std::vector<LaguerrePoly> gf_expand(unsigned N) {
    // alpha-binomial series for (1-t)^-(alpha+1): t^l coefficient binom(alpha+l, l)
    TruncSeries bin(Var::t, N);
    for (unsigned l = 0; l <= N; ++l) bin.set_coeff(l, binom_poly(static_cast<long>(l), l));

    const TruncSeries full = series_mul(bin, gf_exponential_factor(N));
    std::vector<LaguerrePoly> out;
    out.reserve(N + 1);
    for (unsigned n = 0; n <= N; ++n) out.push_back({n, full[n]});
    return out;
}

double gamma_form_eval(unsigned n, double alpha, double lambda, double x) {
    for (unsigned m = 0; m <= n; ++m)
        if (is_nonpositive_integer(alpha + m + 1.0))
            throw std::domain_error("gamma_form_eval: Gamma pole, alpha + m + 1 is a nonpositive integer");
    const auto [lg_top, s_top] = log_gamma_signed(static_cast<double>(n) + alpha + 1.0);
    const double lg_n1 = std::lgamma(static_cast<double>(n) + 1.0);
    double r = 0.0;
    double neg_x_pow = 1.0;
    for (unsigned m = 0; m <= n; ++m) {
        const auto [lg_m, s_m] = log_gamma_signed(static_cast<double>(m) + alpha + 1.0);
        r += special::falling_lambda_num(1.0, m, lambda) * binom_prod(static_cast<double>(n), m) *
             neg_x_pow * static_cast<double>(s_top * s_m) * std::exp(lg_top - lg_n1 - lg_m);
        neg_x_pow *= -x;
    }
    return r;
}

double eval_double(unsigned n, double alpha, double lambda, double x) {
    double r = 0.0;
    double term_x = 1.0;  // (-x)^m / m!
    for (unsigned m = 0; m <= n; ++m) {
        r += binom_prod(static_cast<double>(n) + alpha, n - m) *
             special::falling_lambda_num(1.0, m, lambda) * term_x;
        term_x *= -x / static_cast<double>(m + 1);
    }
    return r;
}

MultiPoly theorem4_poly(unsigned n) {
    MultiPoly p;
    const MultiPoly neg_x = -MultiPoly::symbol(Sym::x);
    for (unsigned k = 0; k <= n; ++k)
        p += neg_x.pow(k) * special::falling_lambda(MultiPoly(1), k) * BigRat(special::lah(n, k));
    p *= BigRat(BigInt(1), factorial(n));
    return p;
}

std::vector<MultiPoly> seq_from_A(const TruncSeries& A, unsigned N) {
    if (A.var() != Var::t) throw std::invalid_argument("seq_from_A: A must be a series in t");
    if (A.order() < N) throw std::invalid_argument("seq_from_A: A known to too low an order");
    for (unsigned k = 0; k <= N; ++k)
        if (A[k].mentions(Sym::x))
            throw std::invalid_argument("seq_from_A: A has a coefficient mentioning x");
    if (A[0].is_zero()) throw std::invalid_argument("seq_from_A: A(0) = 0, series not invertible");

    const TruncSeries full = series_mul(truncate(A, N), gf_exponential_factor(N));
    std::vector<MultiPoly> ys;
    ys.reserve(N + 1);
    for (unsigned k = 0; k <= N; ++k) ys.push_back(full[k]);
    return ys;
}

MultiPoly deriv_recurrence_rhs(unsigned n, const std::vector<MultiPoly>& lower, DerivForm form) {
    if (n == 0) throw std::invalid_argument("deriv_recurrence_rhs: recurrences start at n = 1");
    const MultiPoly x = MultiPoly::symbol(Sym::x);
    const MultiPoly lam = MultiPoly::symbol(Sym::lambda);
    if (form == DerivForm::three_term) {
        if (lower.size() < 2)
            throw std::invalid_argument("deriv_recurrence_rhs: three_term needs y_{n-1} and its x-derivative");
        const MultiPoly& y = lower[0];
        const MultiPoly& dy = lower[1];
        return (MultiPoly(1) + x * lam) * dy - y;
    }
    if (lower.size() < n)
        throw std::invalid_argument("deriv_recurrence_rhs: lah_sum needs y_0..y_{n-1}");
    MultiPoly rhs;
    for (unsigned k = 1; k <= n; ++k) {
        MultiPoly inner;
        for (unsigned l = 1; l <= k; ++l)
            inner += (x * lam).pow(l - 1) * BigRat(binomial(k - 1, k - l));
        rhs += inner * lower[n - k];
    }
    return -rhs;
}

TruncSeries rodrigues_residual(unsigned n, unsigned alpha_int, unsigned N) {
    if (N < n + alpha_int + 4)
        throw std::invalid_argument("rodrigues_residual: N too small, need N >= n + alpha + 4");
    const unsigned W = N + n;

    // e_lambda(-x) as a series in x, known through order W
    const TruncSeries E =
        scale_var(retag(special::deg_exp_series(MultiPoly(1), W), Var::x), BigRat(-1));

    // d^n/dx^n [E * x^(n+alpha)] * (1 - lambda x)^n
    const MultiPoly one_minus_lx =
        MultiPoly(1) - MultiPoly::symbol(Sym::lambda) * MultiPoly::symbol(Sym::x);
    const TruncSeries diffed = series_diff(series_shift(E, n + alpha_int), n);
    const TruncSeries lhs =
        series_mul(diffed, TruncSeries::from_poly(one_minus_lx.pow(n), Var::x, diffed.order()));

    // n! * E * x^alpha * sum_m c_m x^m (1 - lambda x)^(n-m) with c_m from the
    // degree-n polynomial at alpha = alpha_int
    const MultiPoly L = explicit_poly(n).poly.eval(
        Bindings::at(Sym::alpha, BigRat(static_cast<long>(alpha_int))));
    MultiPoly cleared;
    const MultiPoly x = MultiPoly::symbol(Sym::x);
    for (unsigned m = 0; m <= n; ++m)
        cleared += L.coeff_of(Sym::x, m) * x.pow(m) * one_minus_lx.pow(n - m);
    const TruncSeries shifted_E = series_shift(E, alpha_int);
    const TruncSeries rhs = series_scale(
        series_mul(shifted_E, TruncSeries::from_poly(cleared, Var::x, shifted_E.order())),
        BigRat(factorial(n)));

    return truncate(lhs, N) - truncate(rhs, N);
}

}  // namespace deglag::laguerre
