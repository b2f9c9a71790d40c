#pragma once

#include <string>
#include <vector>

namespace polyfault {

struct VerifyCheck {
    enum class Status { pass, fail, skipped };
    std::string name;
    std::string expected;
    std::string actual;
    Status status = Status::skipped;
    long elapsed_ms = 0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

enum class VerifySuite { quick, full };

// Runs the full battery of paper-level checks: exact counting families,
// feasibility and crossing-number constructions, bounds, injectivity, and
// the DP-vs-enumeration oracle agreement. The quick suite caps oracle runs
// at rectangles of 60 cells; full adds the 6x12 and 7x12 DP checks.
VerifyReport run_verify(VerifySuite suite);

std::string verify_report_to_json(const VerifyReport& report);

}  // namespace polyfault
