#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "deglag/rational.hpp"

namespace deglag::tables {

/// Lah triangle rows n = 1..n_max, k = 1..n.
/// CSV: header "n,k,lah" then one row per entry, exact integers.
std::string lah_csv(unsigned n_max);
/// JSON: {"schema":1,"kind":"lah","n_max":N,"rows":[{"n","k","lah":"<int>"}]}.
nlohmann::json lah_json(unsigned n_max);

/// Degenerate Laguerre coefficient table for n = 0..n_max, optionally with
/// exact values bound for lambda and/or alpha.
/// CSV: header "n,ex,el,ea,coeff" then one row per surviving term.
std::string laguerre_csv(unsigned n_max, const std::optional<BigRat>& lambda,
                         const std::optional<BigRat>& alpha);
/// JSON: {"schema":1,"kind":"laguerre","n_max":N,"lambda":"p/q"|null,
///        "alpha":"p/q"|null,"rows":[{"n":n,"terms":[...]}]}.
nlohmann::json laguerre_json(unsigned n_max, const std::optional<BigRat>& lambda,
                             const std::optional<BigRat>& alpha);

}  // namespace deglag::tables
