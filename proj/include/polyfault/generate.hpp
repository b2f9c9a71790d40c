#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "polyfault/grid.hpp"

namespace polyfault {

// Raised when the seam-window search exhausts its space. The extension
// theorems guarantee existence, so this signals a falsified instance and is
// never swallowed.
struct NoExtensionFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { left, right, top, bottom };

// Seam of an extension: `width` rows/columns next to `side` are cleared and
// re-searched together with the six new ones. A critical tromino reaches into
// the third column, so the width never drops below 3.
struct SeamWindow {
    int width = 4;
    Side side = Side::right;
};

// Faultfree tilings of the basis rectangles R(i,6) and R(i,9), 4 <= i <= 9:
// for each pair the canonically first faultfree tiling, embedded as static
// data and cross-checked against the enumeration oracle by tests.
const std::map<std::pair<int, int>, Tiling>& basis_catalog();
Tiling basis_tiling(int i, int j);

// Extends a faultfree tiling by six columns (rows) on the window's side:
// pieces clear of the seam stay put, the seam plus the six new columns are
// re-searched, and the canonically first faultfree completion wins. On
// failure the window widens to 5 once before NoExtensionFound.
Tiling extend_six(const Tiling& t, const SeamWindow& window);

// Faultfree tiling of R(m,n) for any m,n >= 4 with 3 | mn: decompose
// m = i + 6a (4 <= i <= 9), n = j + 6b (j in {6,9}) over a transpose that
// makes 3 | n, start from the basis case and extend six at a time.
Tiling construct_faultfree(int m, int n);

// Faultfree tiling of R(m,n), m,n >= 10 and 3 | mn, whose horizontal and
// vertical crossing numbers are both <= 2: build R(m-6,n-6) and grow both
// sides, forcing exactly two crossings on each former edge line.
Tiling construct_min_crossing(int m, int n);

}  // namespace polyfault
