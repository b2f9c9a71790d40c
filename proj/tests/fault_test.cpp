#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polyfault/enumerate.hpp"
#include "polyfault/fault.hpp"

using namespace polyfault;

namespace {

Tiling first_tiling(Rect r, EnumMode mode = EnumMode::all) {
    Tiling out;
    enumerate_tilings(r, mode, [&](const Tiling& t) {
        out = t;
        return false;
    });
    return out;
}

// R(2,6) as two R(2,3) blocks: the line after column 3 is a fault line
Tiling two_block_26() {
    Tiling t;
    t.rect = {2, 6};
    t.pieces = {{{1, 1}, Corner::BR}, {{1, 2}, Corner::TL},
                {{1, 4}, Corner::BR}, {{1, 5}, Corner::TL}};
    return t;
}

}  // namespace

TEST_CASE("crossing profile of the canonical R(2,3) tiling") {
    const CrossingProfile p = crossing_profile(first_tiling({2, 3}));
    CHECK(p.horizontal == std::vector<int>{2});
    CHECK(p.vertical == std::vector<int>{1, 1});
}

TEST_CASE("two-block R(2,6): fault after column 3") {
    const Tiling t = two_block_26();
    CHECK(crossing_profile(t).vertical == std::vector<int>{1, 1, 0, 1, 1});
    const auto lines = fault_lines(t);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == FaultLine{LineAxis::vertical, 4});
    CHECK(crossing_numbers(t).vertical_cn == 0);
    CHECK_FALSE(is_faultfree(t));
}

TEST_CASE("crossing numbers of R(2,3)") {
    const CrossingNumbers cn = crossing_numbers(first_tiling({2, 3}));
    CHECK(cn.horizontal_cn == 2);
    CHECK(cn.vertical_cn == 1);
    CHECK(cn.critical_h_line == 2);
    CHECK(cn.critical_v_line == 2);
}

TEST_CASE("profile sums equal the piece count on both axes") {
    for (Rect r : {Rect{2, 3}, Rect{4, 6}, Rect{3, 4}, Rect{5, 6}}) {
        enumerate_tilings(r, EnumMode::all, [&](const Tiling& t) {
            const CrossingProfile p = crossing_profile(t);
            long long hsum = 0, vsum = 0;
            for (int x : p.horizontal) hsum += x;
            for (int x : p.vertical) vsum += x;
            CHECK(hsum == r.area() / 3);
            CHECK(vsum == r.area() / 3);
            return true;
        });
    }
}

TEST_CASE("counting inequality examples") {
    const auto r23 = check_counting_inequality(first_tiling({2, 3}));
    CHECK(r23.k == 1);
    CHECK(r23.rhs == 4);
    CHECK(r23.lhs == 3);
    CHECK(r23.slack == 1);

    enumerate_tilings({4, 6}, EnumMode::faultfree, [](const Tiling& t) {
        const auto r = check_counting_inequality(t);
        CHECK(r.k >= 1);
        CHECK(r.slack >= 0);
        return true;
    });
}

TEST_CASE("maximum crossing bound") {
    CHECK(max_crossing_bound(3, 10) == 1);
    CHECK(max_crossing_bound(6, 12) == 3);
    CHECK(max_crossing_bound(9, 4) == 2);
    CHECK_THROWS_AS(max_crossing_bound(4, 6), std::invalid_argument);
}

TEST_CASE("bound compliance over enumerated faultfree tilings (mn <= 54)") {
    for (Rect r : {Rect{6, 4}, Rect{6, 5}, Rect{6, 6}, Rect{6, 7}, Rect{6, 8}, Rect{6, 9},
                   Rect{9, 4}, Rect{9, 5}, Rect{9, 6}}) {
        const int bound = max_crossing_bound(r.rows, r.cols);
        enumerate_tilings(r, EnumMode::faultfree, [&](const Tiling& t) {
            const CrossingNumbers cn = crossing_numbers(t);
            CHECK(cn.horizontal_cn <= bound);
            CHECK(cn.vertical_cn <= bound);
            return true;
        });
    }
}

TEST_CASE("flip reverses the horizontal profile, transpose swaps axes") {
    enumerate_tilings({4, 6}, EnumMode::all, [count = 0](const Tiling& t) mutable {
        const CrossingProfile p = crossing_profile(t);
        CrossingProfile pf = crossing_profile(flip(t));
        std::reverse(pf.horizontal.begin(), pf.horizontal.end());
        CHECK(pf.horizontal == p.horizontal);
        CHECK(pf.vertical == p.vertical);
        const CrossingProfile pt = crossing_profile(transpose(t));
        CHECK(pt.horizontal == p.vertical);
        CHECK(pt.vertical == p.horizontal);
        return ++count < 40;
    });
}

TEST_CASE("flip preserves faultfree-ness on R(4,6)") {
    int seen = 0;
    enumerate_tilings({4, 6}, EnumMode::faultfree, [&](const Tiling& t) {
        ++seen;
        CHECK(is_faultfree(flip(t)));
        return true;
    });
    CHECK(seen == 2);
}

TEST_CASE("analysis json shape") {
    const std::string doc = analysis_to_json(two_block_26());
    CHECK(doc.find("\"fault_lines\":[[\"v\",4]]") != std::string::npos);
    CHECK(doc.find("\"v_crossing_number\":0") != std::string::npos);
}
