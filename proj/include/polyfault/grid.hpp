#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyfault {

// Rows and columns are 1-based throughout. Grid lines follow the convention
// that the left edge is vertical line 1 and the top edge is horizontal line 1,
// so the internal line between columns j and j+1 is vertical line j+1.

struct Rect {
    int rows = 0;
    int cols = 0;

    long long area() const { return static_cast<long long>(rows) * cols; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

// Necessary conditions for an L-tromino tiling to exist: the area must be a
// multiple of 3 and no tromino fits in a single row or column.
bool tromino_tileable(Rect r);

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Corner : std::uint8_t { TL = 0, TR = 1, BL = 2, BR = 3 };

std::string_view corner_name(Corner c);
std::optional<Corner> corner_from_name(std::string_view name);

// An L-tromino: the 2x2 box whose top-left cell is `anchor`, minus the
// `missing` corner. Every placement spans exactly two consecutive rows and
// two consecutive columns.
struct TrominoPlacement {
    Cell anchor;
    Corner missing = Corner::TL;

    friend auto operator<=>(const TrominoPlacement&, const TrominoPlacement&) = default;
};

std::array<Cell, 3> cells_of(const TrominoPlacement& p);

struct Violation {
    enum class Kind { overlap, gap, out_of_bounds, order_violation };
    Kind kind;
    Cell cell;       // offending cell for overlap / gap
    int index = -1;  // offending piece index for out_of_bounds / order_violation

    std::string describe() const;
};

// A complete cover of `rect`. Pieces are kept in canonical order: sorted by
// (anchor row, anchor col, missing corner), which coincides with sorting by
// the topmost-leftmost covered cell. Equality is structural.
struct Tiling {
    Rect rect;
    std::vector<TrominoPlacement> pieces;

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

void canonicalize(Tiling& t);

// nullopt when the tiling is a disjoint, in-bounds, exact cover in canonical
// order; otherwise the first violation found.
std::optional<Violation> validate(const Tiling& t);

Tiling transpose(const Tiling& t);

// Reflection in the horizontal axis (rows mirrored).
Tiling flip(const Tiling& t);

}  // namespace polyfault
