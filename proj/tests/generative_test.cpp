#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyfault/enumerate.hpp"
#include "polyfault/fault.hpp"
#include "polyfault/generate.hpp"

using namespace polyfault;

TEST_CASE("basis catalog holds every feasible pair and only faultfree tilings") {
    const auto& catalog = basis_catalog();
    int feasible = 0;
    for (int i = 4; i <= 9; ++i)
        for (int j : {6, 9}) {
            if (i * j % 3 != 0) continue;
            ++feasible;
            CAPTURE(i); CAPTURE(j);
            const Tiling t = basis_tiling(i, j);
            CHECK(t.rect == Rect{i, j});
            CHECK_FALSE(validate(t).has_value());
            CHECK(is_faultfree(t));
        }
    // the paper speaks of 11 basis cases; all 12 (i,j) pairs are feasible and
    // the catalog keeps every one of them
    CHECK(feasible == 12);
    CHECK(catalog.size() == 12);
    CHECK_THROWS_AS(basis_tiling(3, 6), std::invalid_argument);
}

TEST_CASE("catalog regenerates from the enumeration oracle bit-exactly") {
    for (const auto& [key, embedded] : basis_catalog()) {
        Tiling regenerated;
        enumerate_tilings({key.first, key.second}, EnumMode::faultfree, [&](const Tiling& t) {
            regenerated = t;
            return false;
        });
        CAPTURE(key.first); CAPTURE(key.second);
        CHECK(regenerated == embedded);
    }
}

TEST_CASE("extend_six grows faultfree tilings by six columns or rows") {
    const Tiling base = basis_tiling(4, 6);
    const Tiling wide = extend_six(base, {4, Side::right});
    CHECK(wide.rect == Rect{4, 12});
    CHECK(is_faultfree(wide));

    const Tiling wide66 = extend_six(basis_tiling(6, 6), {4, Side::right});
    CHECK(wide66.rect == Rect{6, 12});
    CHECK(is_faultfree(wide66));

    const Tiling tall = extend_six(basis_tiling(5, 9), {4, Side::bottom});
    CHECK(tall.rect == Rect{11, 9});
    CHECK(is_faultfree(tall));

    const Tiling left = extend_six(base, {4, Side::left});
    CHECK(left.rect == Rect{4, 12});
    CHECK(is_faultfree(left));

    const Tiling top = extend_six(basis_tiling(5, 9), {4, Side::top});
    CHECK(top.rect == Rect{11, 9});
    CHECK(is_faultfree(top));
}

TEST_CASE("extension by six columns preserves determinism") {
    const Tiling a = extend_six(basis_tiling(5, 9), {4, Side::right});
    const Tiling b = extend_six(basis_tiling(5, 9), {4, Side::right});
    CHECK(a == b);
    CHECK(a.rect == Rect{5, 15});
    CHECK(is_faultfree(a));
}

TEST_CASE("construct_faultfree on the paper's examples") {
    CHECK(is_faultfree(construct_faultfree(4, 6)));
    CHECK(is_faultfree(construct_faultfree(9, 9)));
    CHECK_THROWS_AS(construct_faultfree(3, 6), std::invalid_argument);
    CHECK_THROWS_AS(construct_faultfree(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(construct_faultfree(4, 4), std::invalid_argument);
}

TEST_CASE("construct_faultfree handles transposed and offset families") {
    for (auto [m, n] : {std::pair{10, 6}, {6, 10}, {5, 12}, {12, 5}, {7, 9}, {8, 15}}) {
        CAPTURE(m); CAPTURE(n);
        const Tiling t = construct_faultfree(m, n);
        CHECK(t.rect == Rect{m, n});
        CHECK_FALSE(validate(t).has_value());
        CHECK(is_faultfree(t));
    }
}

TEST_CASE("construct_min_crossing keeps both crossing numbers at two or less") {
    for (auto [m, n] : {std::pair{10, 12}, {12, 12}}) {
        CAPTURE(m); CAPTURE(n);
        const Tiling t = construct_min_crossing(m, n);
        CHECK(t.rect == Rect{m, n});
        CHECK(is_faultfree(t));
        const CrossingNumbers cn = crossing_numbers(t);
        CHECK(cn.horizontal_cn <= 2);
        CHECK(cn.vertical_cn <= 2);
        CHECK(cn.horizontal_cn >= 1);
        CHECK(cn.vertical_cn >= 1);
    }
    CHECK_THROWS_AS(construct_min_crossing(9, 12), std::invalid_argument);
}
