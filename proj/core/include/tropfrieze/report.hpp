#pragma once

#include <string>
#include <vector>

namespace tropfrieze {

enum class CheckStatus { pass, fail, skipped };

/* one line of a verification report */
struct CheckItem {
    CheckStatus status;
    std::string name;
    std::string detail;
};

using CheckReport = std::vector<CheckItem>;

inline bool report_has_failure(const CheckReport& report) {
    for (const auto& item : report)
        if (item.status == CheckStatus::fail) return true;
    return false;
}

inline const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        default: return "SKIPPED";
    }
}

}  // namespace tropfrieze
