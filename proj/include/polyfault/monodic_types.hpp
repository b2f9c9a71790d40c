#pragma once

#include <optional>
#include <vector>

#include "polyfault/grid.hpp"

namespace polyfault {

enum class Direction : std::uint8_t { up, down, left, right };

Direction opposite(Direction d);
// 90 degrees clockwise in grid coordinates (up -> right -> down -> left).
Direction rot90cw(Direction d);
Cell step(Cell c, Direction d);

// A domino with an arrow along its axis (head = tail + dir). The arrow
// identifies the companion monomino: the cell to the right of the arrow at
// its head. Unstretching cannot recover arrows, so they are optional there.
struct DirectedDomino {
    Cell tail;
    Cell head;
    std::optional<Direction> dir;
    friend auto operator<=>(const DirectedDomino&, const DirectedDomino&) = default;
};

// Cover of rect by mn/3 dominoes (red) and mn/3 monominoes (blue).
struct MonodicTiling {
    Rect rect;
    std::vector<DirectedDomino> dominoes;
    std::vector<Cell> monominoes;
    friend bool operator==(const MonodicTiling&, const MonodicTiling&) = default;
};

enum class PieceColour : std::uint8_t { red, blue };

struct ColouredDomino {
    Cell a;
    Cell b;
    PieceColour colour = PieceColour::red;
    friend auto operator<=>(const ColouredDomino&, const ColouredDomino&) = default;
};

struct ColouredDominoTiling {
    Rect rect;
    std::vector<ColouredDomino> dominoes;
    friend bool operator==(const ColouredDominoTiling&, const ColouredDominoTiling&) = default;
};

}  // namespace polyfault
