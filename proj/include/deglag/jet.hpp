#pragma once

#include <vector>

#include "deglag/rational.hpp"

namespace deglag::jets {

/// Truncated Taylor expansion of a real function at a real point:
/// c[k] = f^(k)(x0) / k!, for k = 0..K. Arithmetic never reads beyond K.
class Jet {
public:
    Jet(double x0, std::vector<double> coeffs);
    static Jet variable(double x0, unsigned K);
    static Jet constant(double value, double x0, unsigned K);

    double x0() const { return x0_; }
    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    double operator[](unsigned k) const { return c_[k]; }
    const std::vector<double>& coeffs() const { return c_; }

private:
    double x0_;
    std::vector<double> c_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(double s, const Jet& a);
Jet operator+(const Jet& a, double s);

/// 1/u; requires u[0] != 0 (std::domain_error).
Jet recip(const Jet& a);
/// u^r by the convolution recurrence from (u^r)' u = r u' u^r; requires
/// u[0] != 0, and u[0] > 0 for non-integer r.
Jet pow(const Jet& a, double r);
/// exp(u) by the standard exponential recurrence.
Jet exp(const Jet& a);
/// e_lambda(u) = (1 + lambda u)^(1/lambda), exp(u) at lambda = 0.
/// Requires 1 + lambda*u[0] > 0 when lambda != 0.
Jet deg_exp(const Jet& a, double lambda);

/// n! * c[n]; throws when n exceeds the jet order.
double nth_derivative(const Jet& a, unsigned n);

enum class TheoremId { thm2, thm3, thm5 };

/// Parameters of a derivative-identity check. Which fields are read depends
/// on the theorem: thm2 uses n, alpha, a, lambda; thm3 uses n, alpha, lambda;
/// thm5 uses n, lambda.
struct IdentityParams {
    unsigned n = 0;
    double alpha = 0.0;
    double a = 0.0;
    double lambda = 0.0;
};

struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

/// Checks one derivative identity at x0: the left side is the n-th jet
/// derivative of the raw composite, the right side the theorem's closed form
/// evaluated directly. Throws std::domain_error naming the violated
/// precondition when (params, x0) leave the identity's domain.
IdentityReport verify_derivative_identity(TheoremId id, const IdentityParams& params, double x0,
                                          double tol);

}  // namespace deglag::jets
