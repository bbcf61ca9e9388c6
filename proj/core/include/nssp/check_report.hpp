#pragma once

#include <cmath>
#include <string>

namespace nssp {

enum class CheckStatus {
    identity_pass,
    inequality_pass,
    ratio_report,
    identity_fail,
    inequality_fail,
    flagged,  // inconclusive (under-resolved sampling, degenerate data)
};

std::string to_string(CheckStatus s);

struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::ratio_report;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs for inequalities, |lhs-rhs| scale or ratio otherwise
    double tolerance = 0.0;
    std::string context;

    // optional coordinates for CSV emission
    double time = std::nan("");
    double k = std::nan("");
    double sigma = std::nan("");

    bool passed() const {
        return status == CheckStatus::identity_pass || status == CheckStatus::inequality_pass ||
               status == CheckStatus::ratio_report;
    }
};

/// Builds an identity report: passes iff |lhs-rhs| <= tol*max(|lhs|,|rhs|,1).
CheckReport identity_report(std::string name, double lhs, double rhs, double tol);

/// Builds an inequality report: passes iff lhs <= rhs + tol*max(|lhs|,|rhs|,1).
CheckReport inequality_report(std::string name, double lhs, double rhs, double tol);

CheckReport ratio_report(std::string name, double lhs, double rhs, double ratio);

}  // namespace nssp
