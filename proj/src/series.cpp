#include "deglag/series.hpp"

#include <stdexcept>

namespace deglag {

namespace {

void check_coeff(Var var, const MultiPoly& p) {
    if (var == Var::x && p.mentions(Sym::x))
        throw std::invalid_argument("TruncSeries: coefficient mentions the main variable x: " + p.str());
}

void check_same_var(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string(op) + ": mismatched main variables");
}

}  // namespace

TruncSeries::TruncSeries(Var var, std::vector<MultiPoly> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
    for (const auto& p : coeffs_) check_coeff(var_, p);
}

TruncSeries TruncSeries::unit(Var var, unsigned order) {
    TruncSeries s(var, order);
    s.coeffs_[0] = MultiPoly(1);
    return s;
}

TruncSeries TruncSeries::from_poly(const MultiPoly& p, Var var, unsigned order) {
    TruncSeries s(var, order);
    if (var == Var::t) {
        s.coeffs_[0] = p;
        return s;
    }
    for (const auto& [e, c] : p.terms()) {
        if (e.ex > order) continue;
        Exponents rest = e;
        rest.ex = 0;
        s.coeffs_[e.ex] += MultiPoly::monomial(rest, c);
    }
    return s;
}

const MultiPoly& TruncSeries::coeff(unsigned k) const {
    if (k >= coeffs_.size()) throw std::out_of_range("TruncSeries: coefficient index above order");
    return coeffs_[k];
}

void TruncSeries::set_coeff(unsigned k, MultiPoly p) {
    if (k >= coeffs_.size()) throw std::out_of_range("TruncSeries: coefficient index above order");
    check_coeff(var_, p);
    coeffs_[k] = std::move(p);
}

bool TruncSeries::is_zero() const {
    for (unsigned k = 0; k <= order(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_same_var(a, b, "series add");
    TruncSeries r(a.var(), std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k) r.set_coeff(k, a[k] + b[k]);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_same_var(a, b, "series sub");
    TruncSeries r(a.var(), std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k) r.set_coeff(k, a[k] - b[k]);
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    check_same_var(a, b, "series_mul");
    TruncSeries r(a.var(), std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k) {
        MultiPoly c;
        for (unsigned i = 0; i <= k; ++i) c += a[i] * b[k - i];
        r.set_coeff(k, std::move(c));
    }
    return r;
}

TruncSeries series_inverse(const TruncSeries& a) {
    if (!a[0].is_constant() || a[0].is_zero())
        throw std::domain_error("series_inverse: constant term is not an invertible rational: " + a[0].str());
    const BigRat c0 = a[0].constant_value();
    TruncSeries r(a.var(), a.order());
    r.set_coeff(0, MultiPoly(BigRat(1) / c0));
    for (unsigned k = 1; k <= a.order(); ++k) {
        MultiPoly acc;
        for (unsigned j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r.set_coeff(k, acc * (BigRat(-1) / c0));
    }
    return r;
}

TruncSeries series_diff(const TruncSeries& a, unsigned n) {
    if (n == 0) return a;
    if (n > a.order())
        throw std::invalid_argument("series_diff: derivative order exceeds truncation order");
    TruncSeries r(a.var(), a.order() - n);
    for (unsigned k = 0; k <= r.order(); ++k) {
        BigRat f(1);
        for (unsigned i = 1; i <= n; ++i) f *= BigRat(static_cast<long>(k + i));
        r.set_coeff(k, a[k + n] * f);
    }
    return r;
}

TruncSeries series_scale(const TruncSeries& a, const BigRat& c) {
    TruncSeries r(a.var(), a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.set_coeff(k, a[k] * c);
    return r;
}

TruncSeries series_scale(const TruncSeries& a, const MultiPoly& p) {
    TruncSeries r(a.var(), a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.set_coeff(k, a[k] * p);
    return r;
}

TruncSeries series_shift(const TruncSeries& a, unsigned m) {
    TruncSeries r(a.var(), a.order() + m);
    for (unsigned k = 0; k <= a.order(); ++k) r.set_coeff(k + m, a[k]);
    return r;
}

TruncSeries scale_var(const TruncSeries& a, const BigRat& c) {
    TruncSeries r(a.var(), a.order());
    BigRat f(1);
    for (unsigned k = 0; k <= a.order(); ++k) {
        r.set_coeff(k, a[k] * f);
        f *= c;
    }
    return r;
}

TruncSeries retag(const TruncSeries& a, Var var) {
    TruncSeries r(var, a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.set_coeff(k, a[k]);
    return r;
}

TruncSeries truncate(const TruncSeries& a, unsigned order) {
    if (order > a.order()) throw std::invalid_argument("truncate: order above the known truncation order");
    TruncSeries r(a.var(), order);
    for (unsigned k = 0; k <= order; ++k) r.set_coeff(k, a[k]);
    return r;
}

}  // namespace deglag
