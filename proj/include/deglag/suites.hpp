#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "deglag/jet.hpp"
#include "deglag/report.hpp"

namespace deglag::suites {

/// Knobs shared by the verification suites. n_max falls back to a per-suite
/// default when unset (12 for the polynomial suites, 8 for rodrigues).
struct Options {
    std::optional<unsigned> n_max;
    unsigned alpha_max = 4;
    unsigned draws = 200;
    std::optional<unsigned> fixed_n;
    std::uint64_t seed = 42;
    double tol = 1e-8;
};

/// Lah-number identities: rising-to-falling connection (n <= 15), series
/// coefficients of (t/(1-t))^k / k! (k <= 10, n <= 20), and the product form
/// C(n-1,k-1) C(n,k) (n-k)! (n <= 20). All exact.
VerifyReport lah_ids(const Options& opt);

/// Generating-function route equals the explicit construction, n <= n_max.
VerifyReport thm1_gf(const Options& opt);

/// Exact Rodrigues-type residuals for n <= n_max, integer alpha <= alpha_max,
/// each checked through series order n + alpha + 12.
VerifyReport rodrigues(const Options& opt);

/// alpha = -1 family via Lah numbers equals the explicit polynomial at
/// alpha := -1, n <= n_max.
VerifyReport thm4(const Options& opt);

/// Both derivative recurrences, exactly, for three generator families:
/// the symbolic-alpha polynomials, A(t) = 1, and A(t) = 1 + t; n <= n_max.
VerifyReport thm6(const Options& opt);

/// Randomized jet-vs-closed-form checks for one derivative identity;
/// `draws` valid parameter draws, deterministic per seed.
VerifyReport jets_suite(jets::TheoremId id, const Options& opt);

/// Every suite above with its defaults, in a fixed order.
std::vector<VerifyReport> all(const Options& opt);

}  // namespace deglag::suites
