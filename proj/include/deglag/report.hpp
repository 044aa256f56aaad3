#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace deglag {

/// One checked case inside a verification suite. `params` describes the case,
/// `extra` (an object) is merged into the emitted case record so suites can
/// attach fields of their own (e.g. residual_zero, max_order_checked).
struct VerifyCase {
    nlohmann::json params;
    bool pass = false;
    double residual_or_relerr = 0.0;
    nlohmann::json extra = nlohmann::json::object();
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    std::size_t passed() const;
    bool all_pass() const { return passed() == cases.size(); }
    /// {"schema":1,"suite":...,"cases":[...],"summary":{"total":N,"passed":M}}
    nlohmann::json to_json() const;
};

}  // namespace deglag
