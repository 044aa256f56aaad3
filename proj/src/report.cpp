#include "deglag/report.hpp"

namespace deglag {

std::size_t VerifyReport::passed() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        if (c.pass) ++n;
    return n;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json out;
    out["schema"] = 1;
    out["suite"] = suite;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json rec;
        rec["params"] = c.params;
        rec["pass"] = c.pass;
        rec["residual_or_relerr"] = c.residual_or_relerr;
        for (auto it = c.extra.begin(); it != c.extra.end(); ++it) rec[it.key()] = it.value();
        arr.push_back(std::move(rec));
    }
    out["cases"] = std::move(arr);
    out["summary"] = {{"total", cases.size()}, {"passed", passed()}};
    return out;
}

}  // namespace deglag
