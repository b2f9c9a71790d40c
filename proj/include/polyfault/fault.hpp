#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyfault/grid.hpp"

namespace polyfault {

// Per-internal-line crossing counts. horizontal[i-1] is the number of pieces
// crossing the line between rows i and i+1 (the paper-numbered horizontal
// grid line i+1); vertical is analogous over columns. Each tromino spans two
// rows and two columns, so both vectors sum to mn/3.
struct CrossingProfile {
    std::vector<int> horizontal;  // size m-1
    std::vector<int> vertical;    // size n-1

    friend bool operator==(const CrossingProfile&, const CrossingProfile&) = default;
};

struct CrossingNumbers {
    int horizontal_cn = 0;
    int vertical_cn = 0;
    int critical_h_line = 0;  // paper numbering: line between rows i, i+1 is i+1
    int critical_v_line = 0;
};

enum class LineAxis { horizontal, vertical };

struct FaultLine {
    LineAxis axis;
    int line;  // paper numbering
    friend auto operator<=>(const FaultLine&, const FaultLine&) = default;
};

CrossingProfile crossing_profile(const Tiling& t);

// Internal lines with zero crossings, horizontal first, each axis sorted.
std::vector<FaultLine> fault_lines(const Tiling& t);

// Minima of the profile; ties broken towards the smallest line index.
CrossingNumbers crossing_numbers(const Tiling& t);

bool is_faultfree(const Tiling& t);

// Both forms of the counting inequality: with k = min of the two crossing
// numbers, k(m+n-2) <= 2mn/3, and per-axis
// h_cn*(m-1) + v_cn*(n-1) <= 2mn/3. A violation would be a bug in
// crossing_profile, so it trips an assertion rather than reporting.
struct CountingInequalityReport {
    int k = 0;
    long long lhs = 0;        // k(m+n-2)
    long long rhs = 0;        // 2mn/3
    long long slack = 0;      // rhs - lhs
    long long axis_lhs = 0;   // h_cn(m-1) + v_cn(n-1)
    long long axis_slack = 0;
};

CountingInequalityReport check_counting_inequality(const Tiling& t);

// Theorem-4 cap on either crossing number of any tiling of R(3t, n):
// min(2t-1, floor(2n/3)). Throws when 3 does not divide m (transpose first).
int max_crossing_bound(int m, int n);

// analyze JSON for the CLI
std::string analysis_to_json(const Tiling& t);

}  // namespace polyfault
