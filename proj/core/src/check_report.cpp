#include "nssp/check_report.hpp"

#include <algorithm>

namespace nssp {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::identity_pass: return "identity_pass";
        case CheckStatus::inequality_pass: return "inequality_pass";
        case CheckStatus::ratio_report: return "ratio_report";
        case CheckStatus::identity_fail: return "identity_fail";
        case CheckStatus::inequality_fail: return "inequality_fail";
        case CheckStatus::flagged: return "flagged";
    }
    return "?";
}

CheckReport identity_report(std::string name, double lhs, double rhs, double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    r.margin = std::abs(lhs - rhs);
    r.status = r.margin <= tol * scale ? CheckStatus::identity_pass : CheckStatus::identity_fail;
    return r;
}

CheckReport inequality_report(std::string name, double lhs, double rhs, double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.margin = rhs - lhs;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    r.status = lhs <= rhs + tol * scale ? CheckStatus::inequality_pass : CheckStatus::inequality_fail;
    return r;
}

CheckReport ratio_report(std::string name, double lhs, double rhs, double ratio) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = ratio;
    r.status = CheckStatus::ratio_report;
    return r;
}

}  // namespace nssp
