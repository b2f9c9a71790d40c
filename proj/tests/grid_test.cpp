#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyfault/grid.hpp"
#include "polyfault/json_io.hpp"

using namespace polyfault;

namespace {

// the two-piece cover of R(2,3): an L in the left 2x2 box, an L in the right
Tiling r23_cover() {
    Tiling t;
    t.rect = {2, 3};
    t.pieces = {{{1, 1}, Corner::BR}, {{1, 2}, Corner::TL}};
    return t;
}

}  // namespace

TEST_CASE("cells_of expands the 2x2 box minus the missing corner") {
    CHECK(cells_of({{1, 1}, Corner::BR}) == std::array<Cell, 3>{{{1, 1}, {1, 2}, {2, 1}}});
    CHECK(cells_of({{1, 1}, Corner::TL}) == std::array<Cell, 3>{{{1, 2}, {2, 1}, {2, 2}}});
    CHECK(cells_of({{3, 5}, Corner::TR}) == std::array<Cell, 3>{{{3, 5}, {4, 5}, {4, 6}}});
}

TEST_CASE("tromino_tileable gate") {
    CHECK(tromino_tileable({2, 3}));
    CHECK(tromino_tileable({6, 6}));
    CHECK_FALSE(tromino_tileable({1, 3}));
    CHECK_FALSE(tromino_tileable({3, 1}));
    CHECK_FALSE(tromino_tileable({4, 4}));
}

TEST_CASE("validate accepts the R(2,3) cover") {
    CHECK_FALSE(validate(r23_cover()).has_value());
}

TEST_CASE("validate reports gaps, overlaps, bounds and order") {
    Tiling missing = r23_cover();
    missing.pieces.pop_back();
    auto v = validate(missing);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::gap);

    Tiling doubled = r23_cover();
    doubled.pieces.push_back(doubled.pieces[0]);
    canonicalize(doubled);
    v = validate(doubled);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::overlap);

    Tiling outside = r23_cover();
    outside.pieces[1] = {{1, 3}, Corner::TL};
    v = validate(outside);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::out_of_bounds);

    Tiling disorder = r23_cover();
    std::swap(disorder.pieces[0], disorder.pieces[1]);
    v = validate(disorder);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::order_violation);
}

TEST_CASE("transpose maps R(2,3) to a valid R(3,2) cover and is an involution") {
    const Tiling t = r23_cover();
    const Tiling tt = transpose(t);
    CHECK(tt.rect == Rect{3, 2});
    CHECK_FALSE(validate(tt).has_value());
    CHECK(tt.pieces.size() == t.pieces.size());
    CHECK(transpose(tt) == t);
}

TEST_CASE("flip mirrors rows and is an involution") {
    const Tiling t = r23_cover();
    const Tiling f = flip(t);
    CHECK(f.rect == t.rect);
    CHECK_FALSE(validate(f).has_value());
    CHECK(flip(f) == t);
    // the top-left piece mirrors into the bottom-left box corner
    CHECK(f.pieces[0] == TrominoPlacement{{1, 1}, Corner::TR});
}

TEST_CASE("json round trip is byte-identical in canonical order") {
    const Tiling t = r23_cover();
    const std::string doc = tiling_to_json(t);
    const Tiling parsed = tiling_from_json(doc);
    CHECK(parsed == t);
    CHECK(tiling_to_json(parsed) == doc);
    CHECK(doc ==
          R"({"rows":2,"cols":3,"pieces":[{"r":1,"c":1,"missing":"BR"},{"r":1,"c":2,"missing":"TL"}]})");
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(tiling_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(tiling_from_json(R"({"rows":2,"cols":3,"pieces":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(
        tiling_from_json(R"({"rows":2,"cols":3,"pieces":[{"r":1,"c":1,"missing":"XX"}]})"),
        std::invalid_argument);
}
