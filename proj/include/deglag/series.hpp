#pragma once

#include <vector>

#include "deglag/multipoly.hpp"

namespace deglag {

/// Main variable of a truncated series.
enum class Var { t, x };

/// Truncated formal power series in one main variable with MultiPoly
/// coefficients. A series of order N carries the N+1 coefficients of
/// var^0..var^N; everything above is unknown, not zero. Coefficients never
/// mention the main variable (only enforceable for Var::x, since t is not a
/// polynomial symbol).
///
/// Truncation orders are explicit everywhere; no ambient precision state.
class TruncSeries {
public:
    TruncSeries(Var var, unsigned order) : var_(var), coeffs_(order + 1) {}
    TruncSeries(Var var, std::vector<MultiPoly> coeffs);

    static TruncSeries unit(Var var, unsigned order);
    /// Reads the main-variable exponents of `p` off into series indices
    /// (x-degrees above `order` are truncated away). For Var::t the whole
    /// polynomial is the order-0 coefficient.
    static TruncSeries from_poly(const MultiPoly& p, Var var, unsigned order);

    Var var() const { return var_; }
    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const MultiPoly& coeff(unsigned k) const;
    const MultiPoly& operator[](unsigned k) const { return coeff(k); }
    void set_coeff(unsigned k, MultiPoly p);
    bool is_zero() const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    Var var_;
    std::vector<MultiPoly> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);

/// Cauchy product, truncated at min(a.order, b.order). Throws
/// std::invalid_argument when the main variables differ.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse through the truncation order. Requires an
/// invertible constant term: a constant, nonzero rational coefficient at
/// var^0 (std::domain_error otherwise).
TruncSeries series_inverse(const TruncSeries& a);

/// Term-by-term n-th derivative with respect to the main variable; the order
/// drops by n. n > a.order is not representable and throws.
TruncSeries series_diff(const TruncSeries& a, unsigned n);

/// a scaled by a rational or by a polynomial free of the main variable.
TruncSeries series_scale(const TruncSeries& a, const BigRat& c);
TruncSeries series_scale(const TruncSeries& a, const MultiPoly& p);

/// Multiplication by var^m. The result is sound through order a.order + m.
TruncSeries series_shift(const TruncSeries& a, unsigned m);

/// Substitution var := c * var.
TruncSeries scale_var(const TruncSeries& a, const BigRat& c);

/// Re-labels the main variable; coefficients must be free of the new one.
TruncSeries retag(const TruncSeries& a, Var var);

/// Drops coefficients above `order` (order <= a.order required).
TruncSeries truncate(const TruncSeries& a, unsigned order);

}  // namespace deglag
