#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fd_oracle.hpp"

#include "deglag/jet.hpp"
#include "deglag/multipoly.hpp"
#include "deglag/rng.hpp"
#include "deglag/special.hpp"
#include "deglag/suites.hpp"

using namespace deglag;
using namespace deglag::jets;

namespace {

// generalized binomial C(r,k)
double binom_real(double r, unsigned k) {
    double v = 1.0;
    for (unsigned j = 0; j < k; ++j) v *= (r - j) / (j + 1.0);
    return v;
}

Jet poly_jet(const MultiPoly& p, double x0, unsigned K, double lv, double av) {
    // Horner evaluation of p over jets, binding lambda/alpha numerically
    const unsigned deg = p.degree(Sym::x);
    Jet acc = Jet::constant(p.coeff_of(Sym::x, deg).eval_double(0.0, lv, av), x0, K);
    const Jet x = Jet::variable(x0, K);
    for (unsigned d = deg; d-- > 0;)
        acc = acc * x + Jet::constant(p.coeff_of(Sym::x, d).eval_double(0.0, lv, av), x0, K);
    return acc;
}

}  // namespace

TEST_CASE("jet of the identity function") {
    const Jet a = Jet::variable(2.0, 3);
    CHECK(a.coeffs() == std::vector<double>{2.0, 1.0, 0.0, 0.0});
    CHECK(Jet::variable(0.0, 0).coeffs() == std::vector<double>{0.0});
    CHECK(Jet::variable(-1.0, 2).coeffs() == std::vector<double>{-1.0, 1.0, 0.0});
}

TEST_CASE("jet arithmetic") {
    const double x0 = 1.75;
    const Jet x = Jet::variable(x0, 4);
    const Jet sq = x * x;
    CHECK(sq[0] == x0 * x0);
    CHECK(sq[1] == 2 * x0);
    CHECK(sq[2] == 1.0);
    CHECK(sq[3] == 0.0);

    const Jet s = x + x;
    CHECK(s[1] == 2.0);
    CHECK((x - x)[0] == 0.0);
    CHECK((3.0 * x)[1] == 3.0);
    CHECK((x + 2.0)[0] == x0 + 2.0);

    CHECK_THROWS_AS(x + Jet::variable(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(x + Jet::variable(x0, 3), std::invalid_argument);
}

TEST_CASE("reciprocal jets") {
    const Jet x = Jet::variable(2.0, 5);
    const Jet r = recip(x);
    const Jet prod = x * r;
    CHECK(prod[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (unsigned k = 1; k <= 5; ++k) CHECK(std::fabs(prod[k]) < 1e-15);
    CHECK_THROWS_AS(recip(Jet::variable(0.0, 3)), std::domain_error);
}

TEST_CASE("real powers of jets") {
    const Jet u = Jet::variable(3.0, 4);
    CHECK(pow(u, 1.0).coeffs() == u.coeffs());

    // (1+x)^r at 0 has coefficients C(r,k)
    Jet one_plus_x = Jet::variable(0.0, 6) + 1.0;
    for (const double r : {0.5, -1.5, 2.0, 3.7}) {
        const Jet w = pow(one_plus_x, r);
        for (unsigned k = 0; k <= 6; ++k)
            CHECK(w[k] == doctest::Approx(binom_real(r, k)).epsilon(1e-13));
    }

    CHECK_THROWS_AS(pow(Jet::variable(0.0, 3), 0.5), std::domain_error);
    CHECK_THROWS_AS(pow(Jet::variable(-2.0, 3), 0.5), std::domain_error);
    // negative base with integer exponent is fine
    CHECK(pow(Jet::variable(-2.0, 3), 2.0)[0] == doctest::Approx(4.0));
}

TEST_CASE("exponential jets") {
    const Jet e = exp(Jet::variable(0.0, 8));
    double f = 1.0;
    for (unsigned k = 0; k <= 8; ++k) {
        if (k > 0) f *= k;
        CHECK(e[k] == doctest::Approx(1.0 / f).epsilon(1e-14));
    }
}

TEST_CASE("degenerate exponential jets") {
    const Jet u = Jet::variable(0.3, 5) * Jet::variable(0.3, 5);

    // lambda = 1 collapses to 1 + u exactly
    const Jet d1 = deg_exp(u, 1.0);
    CHECK(d1[0] == 1.0 + u[0]);
    for (unsigned k = 1; k <= 5; ++k) CHECK(d1[k] == u[k]);

    // lambda = 0 is the classical exponential
    const Jet d0 = deg_exp(u, 0.0);
    const Jet e = exp(u);
    for (unsigned k = 0; k <= 5; ++k) CHECK(d0[k] == doctest::Approx(e[k]).epsilon(1e-14));

    // constant jet: scalar closed form
    const Jet c = deg_exp(Jet::constant(0.7, 0.0, 3), -0.25);
    CHECK(c[0] == doctest::Approx(special::deg_exp_eval(1.0, 0.7, -0.25)).epsilon(1e-14));
    CHECK(c[1] == 0.0);

    CHECK_THROWS_AS(deg_exp(Jet::constant(-3.0, 0.0, 2), 0.5), std::domain_error);
}

TEST_CASE("n-th derivatives from jets") {
    const Jet x = Jet::variable(3.0, 4);
    const Jet sq = x * x;
    CHECK(nth_derivative(sq, 0) == 9.0);
    CHECK(nth_derivative(sq, 1) == 6.0);
    CHECK(nth_derivative(sq, 2) == 2.0);
    CHECK(nth_derivative(sq, 3) == 0.0);
    CHECK_THROWS_AS(nth_derivative(sq, 5), std::out_of_range);
}

TEST_CASE("jet derivatives of random cubics are exact") {
    SplitMix64 g(606);
    for (int i = 0; i < 100; ++i) {
        MultiPoly p;
        for (unsigned d = 0; d <= 3; ++d) {
            const long num = static_cast<long>(g.next() % 19) - 9;
            p = p + MultiPoly::monomial({d, 0, 0}, BigRat(num, 4));
        }
        p = p + MultiPoly::monomial({3, 0, 0}, BigRat(1));  // keep degree 3
        const double x0 = (static_cast<double>(g.next() % 400) - 200.0) / 64.0;

        const Jet jp = poly_jet(p, x0, 4, 0.0, 0.0);
        MultiPoly d = p;
        for (unsigned n = 0; n <= 4; ++n) {
            const double expect = d.eval_double(x0, 0.0, 0.0);
            const double got = nth_derivative(jp, n);
            const double scale = std::max(1.0, std::fabs(expect));
            CHECK(std::fabs(got - expect) / scale <= 1e-12);
            d = d.derivative(Sym::x);
        }
    }
}

TEST_CASE("derivative identities, hand-checked points") {
    // n = 1: d/dx e_l(1/x) = -e_l(1/x) / (x (x + l))
    {
        IdentityParams p;
        p.n = 1;
        p.lambda = 0.3;
        const double x0 = 1.4;
        const IdentityReport r = verify_derivative_identity(TheoremId::thm5, p, x0, 1e-9);
        CHECK(r.pass);
        const double e = special::deg_exp_eval(1.0, 1.0 / x0, p.lambda);
        CHECK(r.lhs == doctest::Approx(-e / (x0 * (x0 + p.lambda))).epsilon(1e-12));
    }
    // n = 0: both sides are x0^alpha e_l(-a/x0)
    {
        IdentityParams p;
        p.n = 0;
        p.alpha = 0.8;
        p.a = 0.6;
        p.lambda = -0.2;
        const IdentityReport r = verify_derivative_identity(TheoremId::thm2, p, 1.3, 1e-12);
        CHECK(r.rel_err == 0.0);
        CHECK(r.pass);
        CHECK(r.lhs ==
              doctest::Approx(std::pow(1.3, 0.8) *
                              special::deg_exp_eval(1.0, -0.6 / 1.3, -0.2)));
    }
    {
        IdentityParams p;
        p.n = 4;
        p.alpha = 0.5;
        p.lambda = 0.2;
        const IdentityReport r = verify_derivative_identity(TheoremId::thm3, p, 0.7, 1e-9);
        CHECK(r.pass);
    }
}

TEST_CASE("identity preconditions are named") {
    IdentityParams p;
    p.n = 2;

    p.a = 1.0;
    p.lambda = 0.3;
    CHECK_THROWS_WITH_AS(verify_derivative_identity(TheoremId::thm2, p, -1.0, 1e-8),
                         "thm2: requires x0 > max(0, a*lambda)", std::domain_error);

    p = IdentityParams{};
    p.n = 2;
    p.alpha = -1.5;
    CHECK_THROWS_WITH_AS(verify_derivative_identity(TheoremId::thm3, p, 0.5, 1e-8),
                         "thm3: requires alpha > -1", std::domain_error);
    p.alpha = 0.5;
    p.lambda = 0.9;
    CHECK_THROWS_WITH_AS(verify_derivative_identity(TheoremId::thm3, p, 2.0, 1e-8),
                         "thm3: requires 1 - lambda*x0 > 0", std::domain_error);

    p = IdentityParams{};
    p.n = 1;
    CHECK_THROWS_WITH_AS(verify_derivative_identity(TheoremId::thm5, p, 0.0, 1e-8),
                         "thm5: requires x0 != 0", std::domain_error);
    p.lambda = -0.4;
    CHECK_THROWS_WITH_AS(verify_derivative_identity(TheoremId::thm5, p, 0.4, 1e-8),
                         "thm5: requires x0 + lambda != 0", std::domain_error);
}

TEST_CASE("randomized draws pass for every identity") {
    suites::Options opt;
    opt.draws = 200;
    opt.seed = 11;
    opt.tol = 1e-8;
    for (const auto id : {TheoremId::thm2, TheoremId::thm3, TheoremId::thm5}) {
        const VerifyReport rep = suites::jets_suite(id, opt);
        CHECK(rep.cases.size() == 200);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("finite differences corroborate the jet engine") {
    // thm2 composite: x^alpha e_l(-a/x)
    {
        const double alpha = 1.3, a = 0.8, lv = -0.25;
        IdentityParams p;
        p.alpha = alpha;
        p.a = a;
        p.lambda = lv;
        const double x0 = 1.6;
        auto f = [&](double x) {
            return std::pow(x, alpha) * special::deg_exp_eval(1.0, -a / x, lv);
        };
        for (unsigned n = 1; n <= 4; ++n) {
            p.n = n;
            const double jet = verify_derivative_identity(TheoremId::thm2, p, x0, 1e-8).lhs;
            const fd::Estimate est = fd::nth_derivative(f, x0, n);
            CHECK(std::fabs(jet - est.value) <= est.band + 1e-13 * std::fabs(jet));
        }
    }
    // thm3 composite: e_l(-x) x^(n+alpha)
    {
        const double alpha = 0.5, lv = 0.2, x0 = 0.7;
        IdentityParams p;
        p.alpha = alpha;
        p.lambda = lv;
        for (unsigned n = 1; n <= 4; ++n) {
            p.n = n;
            auto f = [&](double x) {
                return special::deg_exp_eval(1.0, -x, lv) * std::pow(x, n + alpha);
            };
            const double jet = verify_derivative_identity(TheoremId::thm3, p, x0, 1e-8).lhs;
            const fd::Estimate est = fd::nth_derivative(f, x0, n);
            CHECK(std::fabs(jet - est.value) <= est.band + 1e-13 * std::fabs(jet));
        }
    }
    // thm5 composite: e_l(1/x)
    {
        const double lv = 0.35, x0 = 1.2;
        IdentityParams p;
        p.lambda = lv;
        auto f = [&](double x) { return special::deg_exp_eval(1.0, 1.0 / x, lv); };
        for (unsigned n = 1; n <= 4; ++n) {
            p.n = n;
            const double jet = verify_derivative_identity(TheoremId::thm5, p, x0, 1e-8).lhs;
            const fd::Estimate est = fd::nth_derivative(f, x0, n);
            CHECK(std::fabs(jet - est.value) <= est.band + 1e-13 * std::fabs(jet));
        }
    }
}
