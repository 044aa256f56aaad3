#include "deglag/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace deglag {

nlohmann::json poly_to_json(const MultiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        arr.push_back({{"ex", e.ex}, {"el", e.el}, {"ea", e.ea}, {"coeff", c.str()}});
    }
    return arr;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
    MultiPoly p;
    for (const auto& rec : j) {
        Exponents e{rec.at("ex").get<unsigned>(), rec.at("el").get<unsigned>(),
                    rec.at("ea").get<unsigned>()};
        p = p + MultiPoly::monomial(e, BigRat::from_string(rec.at("coeff").get<std::string>()));
    }
    return p;
}

std::string poly_to_csv(const MultiPoly& p) {
    std::ostringstream out;
    for (const auto& [e, c] : p.terms())
        out << e.ex << ',' << e.el << ',' << e.ea << ',' << c.str() << '\n';
    return out.str();
}

MultiPoly poly_from_csv(const std::string& csv) {
    MultiPoly p;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string f0, f1, f2, f3;
        if (!std::getline(row, f0, ',') || !std::getline(row, f1, ',') ||
            !std::getline(row, f2, ',') || !std::getline(row, f3))
            throw std::invalid_argument("poly_from_csv: malformed row: " + line);
        Exponents e{static_cast<unsigned>(std::stoul(f0)), static_cast<unsigned>(std::stoul(f1)),
                    static_cast<unsigned>(std::stoul(f2))};
        p = p + MultiPoly::monomial(e, BigRat::from_string(f3));
    }
    return p;
}

}  // namespace deglag
