#include "deglag/tables.hpp"

#include <sstream>

#include "deglag/laguerre.hpp"
#include "deglag/multipoly.hpp"
#include "deglag/serialize.hpp"
#include "deglag/special.hpp"

namespace deglag::tables {

namespace {

MultiPoly bound_poly(unsigned n, const std::optional<BigRat>& lambda,
                     const std::optional<BigRat>& alpha) {
    Bindings b;
    if (lambda) b.set(Sym::lambda, *lambda);
    if (alpha) b.set(Sym::alpha, *alpha);
    return laguerre::explicit_poly(n).poly.eval(b);
}

}  // namespace

std::string lah_csv(unsigned n_max) {
    std::ostringstream out;
    out << "n,k,lah\n";
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k)
            out << n << ',' << k << ',' << special::lah(n, k).get_str() << '\n';
    return out.str();
}

nlohmann::json lah_json(unsigned n_max) {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k)
            rows.push_back({{"n", n}, {"k", k}, {"lah", special::lah(n, k).get_str()}});
    return {{"schema", 1}, {"kind", "lah"}, {"n_max", n_max}, {"rows", std::move(rows)}};
}

std::string laguerre_csv(unsigned n_max, const std::optional<BigRat>& lambda,
                         const std::optional<BigRat>& alpha) {
    std::ostringstream out;
    out << "n,ex,el,ea,coeff\n";
    for (unsigned n = 0; n <= n_max; ++n) {
        const MultiPoly p = bound_poly(n, lambda, alpha);
        for (const auto& [e, c] : p.terms())
            out << n << ',' << e.ex << ',' << e.el << ',' << e.ea << ',' << c.str() << '\n';
    }
    return out.str();
}

nlohmann::json laguerre_json(unsigned n_max, const std::optional<BigRat>& lambda,
                             const std::optional<BigRat>& alpha) {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = 0; n <= n_max; ++n)
        rows.push_back({{"n", n}, {"terms", poly_to_json(bound_poly(n, lambda, alpha))}});
    return {{"schema", 1},
            {"kind", "laguerre"},
            {"n_max", n_max},
            {"lambda", lambda ? nlohmann::json(lambda->str()) : nlohmann::json(nullptr)},
            {"alpha", alpha ? nlohmann::json(alpha->str()) : nlohmann::json(nullptr)},
            {"rows", std::move(rows)}};
}

}  // namespace deglag::tables
