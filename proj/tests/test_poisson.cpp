#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "deglag/poisson.hpp"
#include "deglag/special.hpp"

using namespace deglag;
using namespace deglag::poisson;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(validate({-1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(validate({1.0, -1.0}), std::domain_error);  // 1 + alpha*lambda = 0
    CHECK_THROWS_AS(validate({2.0, -0.6}), std::domain_error);
    CHECK_NOTHROW(validate({2.0, 0.3}));
    CHECK_THROWS_AS(validate_sampling({2.0, 0.3}), std::domain_error);
    CHECK_NOTHROW(validate_sampling({2.0, -0.25}));
    CHECK_NOTHROW(validate_sampling({2.0, 0.0}));
}

TEST_CASE("pmf closed form at alpha=1, lambda=-1/2") {
    // pmf(k) = (k+1) / 2^(k+2)
    const DegPoissonParams p{1.0, -0.5};
    CHECK(pmf(0, p) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(pmf(1, p) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(pmf(2, p) == doctest::Approx(3.0 / 16.0).epsilon(1e-14));
    for (unsigned k = 0; k <= 30; ++k) {
        const double expect = (k + 1.0) * std::pow(2.0, -(static_cast<double>(k) + 2.0));
        CHECK(std::fabs(pmf(k, p) - expect) <= 1e-12 * expect);
    }
}

TEST_CASE("pmf reduces to the classical Poisson at lambda=0") {
    const DegPoissonParams p{2.0, 0.0};
    double kf = 1.0;
    for (unsigned k = 0; k <= 20; ++k) {
        if (k > 0) kf *= k;
        const double expect = std::exp(-2.0) * std::pow(2.0, k) / kf;
        CHECK(pmf(k, p) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("pmf(0) is the inverse degenerate exponential") {
    const DegPoissonParams p{3.0, -0.2};
    CHECK(pmf(0, p) == doctest::Approx(std::pow(0.4, 5.0)).epsilon(1e-14));
    CHECK(pmf(0, p) ==
          doctest::Approx(1.0 / special::deg_exp_eval(1.0, 3.0, -0.2)).epsilon(1e-14));
}

TEST_CASE("recurrence matches the direct formula") {
    for (const DegPoissonParams p : {DegPoissonParams{1.0, 0.0}, DegPoissonParams{2.0, -0.25},
                                     DegPoissonParams{0.5, -0.5}}) {
        const double e_inv = 1.0 / special::deg_exp_eval(1.0, p.alpha, p.lambda);
        double ak = 1.0, kf = 1.0;
        for (unsigned k = 0; k <= 50; ++k) {
            if (k > 0) {
                ak *= p.alpha;
                kf *= k;
            }
            const double direct =
                e_inv * ak * special::falling_lambda_num(1.0, k, p.lambda) / kf;
            const double got = pmf(k, p);
            CHECK(std::fabs(got - direct) <= 1e-12 * std::max(direct, 1e-300));
        }
    }
}

TEST_CASE("pmf sums to one") {
    for (const DegPoissonParams p : {DegPoissonParams{1.0, 0.0}, DegPoissonParams{1.0, -0.5},
                                     DegPoissonParams{2.0, -0.25}, DegPoissonParams{0.5, -1.0},
                                     DegPoissonParams{4.0, -0.125}}) {
        double sum = 0.0;
        for (unsigned k = 0; k < 4000; ++k) {
            const double v = pmf(k, p);
            sum += v;
            if (v < 1e-18 && k > 64) break;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("closed-form moments") {
    CHECK(moment_exact(0, {1.7, -0.3}) == 1.0);
    CHECK(moment_exact(1, {1.0, -0.5}) == doctest::Approx(2.0).epsilon(1e-15));
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(moment_exact(n, {2.0, 0.0}) == doctest::Approx(std::pow(2.0, n)).epsilon(1e-14));
    // formal value for lambda > 0 is still defined
    CHECK_NOTHROW(moment_exact(2, {1.0, 0.5}));
    CHECK_THROWS_AS(moment_exact(1, {2.0, -0.5}), std::domain_error);
}

TEST_CASE("series moments agree with closed form") {
    CHECK(moment_series(0, {1.3, -0.4}, 1e-12) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(std::fabs(moment_series(1, {1.0, -0.5}, 1e-12) - 2.0) < 1e-11);

    const double m3 = moment_series(3, {2.0, -0.25}, 1e-12);
    const double e3 = moment_exact(3, {2.0, -0.25});
    CHECK(std::fabs(m3 - e3) <= 1e-11 * std::fabs(e3));

    for (const double alpha : {0.5, 1.0, 2.0})
        for (const double lambda : {0.0, -0.125, -0.4})
            for (unsigned n = 0; n <= 6; ++n) {
                const DegPoissonParams p{alpha, lambda};
                const double exact = moment_exact(n, p);
                const double series = moment_series(n, p, 1e-12);
                CHECK(std::fabs(series - exact) <= 1e-10 * std::max(1.0, std::fabs(exact)));
            }

    CHECK_THROWS_AS(moment_series(1, {1.0, 0.25}, 1e-12), std::domain_error);
}

TEST_CASE("moments are continuous as lambda approaches zero") {
    const double alpha = 1.5;
    for (unsigned n = 1; n <= 4; ++n) {
        double prev = 1e300;
        for (int j = 1; j <= 6; ++j) {
            const double lambda = -std::pow(10.0, -j);
            const double diff = std::fabs(moment_exact(n, {alpha, lambda}) - std::pow(alpha, n));
            CHECK(diff < prev);
            prev = diff;
        }
        CHECK(prev < 1e-4);
    }
}

TEST_CASE("sampling is deterministic per seed") {
    const DegPoissonParams p{1.0, -0.5};
    const auto a = sample(p, 12345, 64);
    const auto b = sample(p, 12345, 64);
    CHECK(a == b);
    REQUIRE(a.size() == 64);
    const auto c = sample(p, 54321, 64);
    CHECK(a != c);
    CHECK_THROWS_AS(sample({1.0, 0.5}, 1, 8), std::domain_error);
}

TEST_CASE("empirical frequencies track the pmf") {
    const DegPoissonParams p{1.0, -0.5};
    const std::size_t N = 100000;
    const auto draws = sample(p, 2026, N);
    std::size_t zeros = 0;
    double mean = 0.0;
    for (const auto d : draws) {
        if (d == 0) ++zeros;
        mean += static_cast<double>(d);
    }
    mean /= static_cast<double>(N);
    const double f0 = static_cast<double>(zeros) / static_cast<double>(N);
    const double band0 = 4.0 * std::sqrt(0.25 * 0.75 / static_cast<double>(N));
    CHECK(std::fabs(f0 - 0.25) <= band0);
    CHECK(std::fabs(mean - 2.0) < 0.05);

    // classical case: mean 1
    const auto classical = sample({1.0, 0.0}, 7, N);
    double m = 0.0;
    for (const auto d : classical) m += static_cast<double>(d);
    m /= static_cast<double>(N);
    CHECK(std::fabs(m - 1.0) < 0.02);
}

TEST_CASE("Monte Carlo moments") {
    const DegPoissonParams p{1.0, -0.5};

    const McEstimate zero = moment_mc(0, p, 1000, 5);
    CHECK(zero.estimate == 1.0);
    CHECK(zero.std_error == 0.0);

    const McEstimate one = moment_mc(1, p, 200000, 99);
    CHECK(one.std_error > 0.0);
    CHECK(std::fabs(one.estimate - 2.0) <= 4.0 * one.std_error);

    const McEstimate two = moment_mc(2, {1.0, 0.0}, 200000, 123);
    CHECK(std::fabs(two.estimate - 1.0) <= 4.0 * two.std_error);

    CHECK_THROWS_AS(moment_mc(1, p, 0, 1), std::invalid_argument);
}
