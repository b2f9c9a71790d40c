#include "polyfault/fault.hpp"

#include <cassert>
#include <json.hpp>
#include <limits>
#include <stdexcept>

namespace polyfault {

CrossingProfile crossing_profile(const Tiling& t) {
    if (auto v = validate(t)) throw std::invalid_argument("invalid tiling: " + v->describe());
    CrossingProfile profile;
    profile.horizontal.assign(std::max(t.rect.rows - 1, 0), 0);
    profile.vertical.assign(std::max(t.rect.cols - 1, 0), 0);
    // a piece anchored at (a, b) crosses exactly the lines between rows a, a+1
    // and between columns b, b+1
    for (const TrominoPlacement& p : t.pieces) {
        profile.horizontal[p.anchor.row - 1]++;
        profile.vertical[p.anchor.col - 1]++;
    }
    return profile;
}

std::vector<FaultLine> fault_lines(const Tiling& t) {
    const CrossingProfile profile = crossing_profile(t);
    std::vector<FaultLine> lines;
    for (std::size_t i = 0; i < profile.horizontal.size(); ++i)
        if (profile.horizontal[i] == 0)
            lines.push_back({LineAxis::horizontal, static_cast<int>(i) + 2});
    for (std::size_t j = 0; j < profile.vertical.size(); ++j)
        if (profile.vertical[j] == 0)
            lines.push_back({LineAxis::vertical, static_cast<int>(j) + 2});
    return lines;
}

static std::pair<int, int> min_with_line(const std::vector<int>& v) {
    int best = std::numeric_limits<int>::max(), line = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < best) {
            best = v[i];
            line = static_cast<int>(i) + 2;  // paper numbering
        }
    }
    if (v.empty()) best = 0;
    return {best, line};
}

CrossingNumbers crossing_numbers(const Tiling& t) {
    const CrossingProfile profile = crossing_profile(t);
    CrossingNumbers cn;
    std::tie(cn.horizontal_cn, cn.critical_h_line) = min_with_line(profile.horizontal);
    std::tie(cn.vertical_cn, cn.critical_v_line) = min_with_line(profile.vertical);
    return cn;
}

bool is_faultfree(const Tiling& t) { return fault_lines(t).empty(); }

CountingInequalityReport check_counting_inequality(const Tiling& t) {
    const CrossingNumbers cn = crossing_numbers(t);
    const long long m = t.rect.rows, n = t.rect.cols;
    CountingInequalityReport report;
    report.k = std::min(cn.horizontal_cn, cn.vertical_cn);
    report.rhs = 2 * m * n / 3;
    report.lhs = static_cast<long long>(report.k) * (m + n - 2);
    report.slack = report.rhs - report.lhs;
    report.axis_lhs = static_cast<long long>(cn.horizontal_cn) * (m - 1) +
                      static_cast<long long>(cn.vertical_cn) * (n - 1);
    report.axis_slack = report.rhs - report.axis_lhs;
    assert(report.slack >= 0 && report.axis_slack >= 0);
    return report;
}

int max_crossing_bound(int m, int n) {
    if (m < 3 || m % 3 != 0)
        throw std::invalid_argument("bound applies to R(3t, n); transpose first");
    if (n < 2) throw std::invalid_argument("no tromino fits in one column");
    const int t = m / 3;
    return std::min(2 * t - 1, 2 * n / 3);
}

std::string analysis_to_json(const Tiling& t) {
    const CrossingProfile profile = crossing_profile(t);
    const CrossingNumbers cn = crossing_numbers(t);
    nlohmann::ordered_json doc;
    doc["horizontal"] = profile.horizontal;
    doc["vertical"] = profile.vertical;
    doc["fault_lines"] = nlohmann::ordered_json::array();
    for (const FaultLine& line : fault_lines(t)) {
        doc["fault_lines"].push_back(
            {line.axis == LineAxis::horizontal ? "h" : "v", line.line});
    }
    doc["h_crossing_number"] = cn.horizontal_cn;
    doc["v_crossing_number"] = cn.vertical_cn;
    return doc.dump();
}

}  // namespace polyfault
