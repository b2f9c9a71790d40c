#include "polyfault/monodic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyfault {

Direction opposite(Direction d) {
    switch (d) {
        case Direction::up: return Direction::down;
        case Direction::down: return Direction::up;
        case Direction::left: return Direction::right;
        case Direction::right: return Direction::left;
    }
    return d;
}

Direction rot90cw(Direction d) {
    switch (d) {
        case Direction::up: return Direction::right;
        case Direction::right: return Direction::down;
        case Direction::down: return Direction::left;
        case Direction::left: return Direction::up;
    }
    return d;
}

Cell step(Cell c, Direction d) {
    switch (d) {
        case Direction::up: return {c.row - 1, c.col};
        case Direction::down: return {c.row + 1, c.col};
        case Direction::left: return {c.row, c.col - 1};
        case Direction::right: return {c.row, c.col + 1};
    }
    return c;
}

static Direction direction_between(Cell from, Cell to) {
    if (to.row == from.row - 1 && to.col == from.col) return Direction::up;
    if (to.row == from.row + 1 && to.col == from.col) return Direction::down;
    if (to.row == from.row && to.col == from.col - 1) return Direction::left;
    if (to.row == from.row && to.col == from.col + 1) return Direction::right;
    throw std::invalid_argument("cells are not adjacent");
}

MonodicTiling to_monodic(const Tiling& t) {
    if (auto v = validate(t)) throw std::invalid_argument("invalid tiling: " + v->describe());
    MonodicTiling mt;
    mt.rect = t.rect;
    for (const TrominoPlacement& p : t.pieces) {
        const auto cells = cells_of(p);
        // the corner cell is adjacent to both ends
        Cell corner{}, ends[2];
        for (int i = 0; i < 3; ++i) {
            int adjacent = 0;
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                if (std::abs(cells[i].row - cells[j].row) + std::abs(cells[i].col - cells[j].col) == 1)
                    ++adjacent;
            }
            if (adjacent == 2) corner = cells[i];
        }
        int e = 0;
        for (int i = 0; i < 3; ++i)
            if (cells[i] != corner) ends[e++] = cells[i];

        // pick the end whose arrow towards the corner leaves the other end on
        // the right-hand side of the arrow head; exactly one choice works
        for (int i = 0; i < 2; ++i) {
            const Direction d = direction_between(ends[i], corner);
            if (step(corner, rot90cw(d)) == ends[1 - i]) {
                mt.dominoes.push_back({ends[i], corner, d});
                mt.monominoes.push_back(ends[1 - i]);
                break;
            }
        }
    }
    std::sort(mt.dominoes.begin(), mt.dominoes.end());
    std::sort(mt.monominoes.begin(), mt.monominoes.end());
    return mt;
}

Tiling from_monodic(const MonodicTiling& mt) {
    if (mt.dominoes.size() != mt.monominoes.size())
        throw InvalidMonodic("domino and monomino counts differ");
    std::set<Cell> monos(mt.monominoes.begin(), mt.monominoes.end());
    if (monos.size() != mt.monominoes.size()) throw InvalidMonodic("duplicate monomino");

    Tiling t;
    t.rect = mt.rect;
    for (const DirectedDomino& d : mt.dominoes) {
        if (!d.dir) throw InvalidMonodic("domino without an arrow");
        if (step(d.tail, *d.dir) != d.head)
            throw InvalidMonodic("arrow does not run along the domino towards its head");
        const Cell mono = step(d.head, rot90cw(*d.dir));
        if (!monos.count(mono))
            throw InvalidMonodic("arrow head has no monomino on its right");
        // tail, head and monomino are three cells of a 2x2 box
        const int r = std::min({d.tail.row, d.head.row, mono.row});
        const int c = std::min({d.tail.col, d.head.col, mono.col});
        Corner missing = Corner::TL;
        bool found = false;
        for (Corner corner : {Corner::TL, Corner::TR, Corner::BL, Corner::BR}) {
            const TrominoPlacement candidate{{r, c}, corner};
            const auto cells = cells_of(candidate);
            const bool match = std::is_permutation(cells.begin(), cells.end(),
                                                   std::array<Cell, 3>{d.tail, d.head, mono}.begin());
            if (match) {
                missing = corner;
                found = true;
                break;
            }
        }
        if (!found) throw InvalidMonodic("domino and monomino do not form an L");
        t.pieces.push_back({{r, c}, missing});
    }
    canonicalize(t);
    if (auto v = validate(t))
        throw InvalidMonodic("reassembled pieces do not tile the rectangle: " + v->describe());
    return t;
}

static void check_monodic_cover(const MonodicTiling& mt) {
    const int m = mt.rect.rows, n = mt.rect.cols;
    std::set<Cell> seen;
    auto take = [&](Cell c) {
        if (c.row < 1 || c.row > m || c.col < 1 || c.col > n)
            throw std::invalid_argument("monodic piece out of bounds");
        if (!seen.insert(c).second) throw std::invalid_argument("monodic pieces overlap");
    };
    for (const DirectedDomino& d : mt.dominoes) {
        if (std::abs(d.tail.row - d.head.row) + std::abs(d.tail.col - d.head.col) != 1)
            throw std::invalid_argument("domino cells are not adjacent");
        take(d.tail);
        take(d.head);
    }
    for (const Cell& c : mt.monominoes) take(c);
    if (seen.size() != static_cast<std::size_t>(m) * n)
        throw std::invalid_argument("monodic tiling does not cover the rectangle");
    if (mt.dominoes.size() != mt.monominoes.size())
        throw std::invalid_argument("a monodic tiling has mn/3 dominoes and mn/3 monominoes");
}

static void check_coloured_cover(const ColouredDominoTiling& cd) {
    const int m = cd.rect.rows, n = cd.rect.cols;
    std::set<Cell> seen;
    for (const ColouredDomino& d : cd.dominoes) {
        if (std::abs(d.a.row - d.b.row) + std::abs(d.a.col - d.b.col) != 1)
            throw NotAStretchImage("domino cells are not adjacent");
        for (Cell c : {d.a, d.b}) {
            if (c.row < 1 || c.row > m || c.col < 1 || c.col > n)
                throw NotAStretchImage("domino out of bounds");
            if (!seen.insert(c).second) throw NotAStretchImage("dominoes overlap");
        }
    }
    if (seen.size() != static_cast<std::size_t>(m) * n)
        throw NotAStretchImage("dominoes do not cover the rectangle");
}

ColouredDominoTiling stretch(const MonodicTiling& mt, StretchDirection dir) {
    check_monodic_cover(mt);
    const bool horizontal = dir == StretchDirection::horizontal;
    ColouredDominoTiling cd;
    cd.rect = horizontal ? Rect{mt.rect.rows, 2 * mt.rect.cols}
                         : Rect{2 * mt.rect.rows, mt.rect.cols};
    // image of one cell: a 1x2 (horizontal) or 2x1 (vertical) block
    auto image = [&](Cell c) -> std::pair<Cell, Cell> {
        if (horizontal) return {{c.row, 2 * c.col - 1}, {c.row, 2 * c.col}};
        return {{2 * c.row - 1, c.col}, {2 * c.row, c.col}};
    };
    for (const Cell& mono : mt.monominoes) {
        auto [a, b] = image(mono);
        cd.dominoes.push_back({a, b, PieceColour::blue});
    }
    for (const DirectedDomino& d : mt.dominoes) {
        const bool domino_horizontal = d.tail.row == d.head.row;
        if (domino_horizontal == horizontal) {
            // parallel to the stretch: each cell image is one domino
            auto [a1, b1] = image(d.tail);
            auto [a2, b2] = image(d.head);
            cd.dominoes.push_back({a1, b1, PieceColour::red});
            cd.dominoes.push_back({a2, b2, PieceColour::red});
        } else {
            // perpendicular: the 2x2 image splits into two dominoes parallel
            // to the original
            auto [a1, b1] = image(d.tail);
            auto [a2, b2] = image(d.head);
            cd.dominoes.push_back({std::min(a1, a2), std::max(a1, a2), PieceColour::red});
            cd.dominoes.push_back({std::min(b1, b2), std::max(b1, b2), PieceColour::red});
        }
    }
    std::sort(cd.dominoes.begin(), cd.dominoes.end());
    return cd;
}

MonodicTiling unstretch(const ColouredDominoTiling& cd, StretchDirection dir) {
    const bool horizontal = dir == StretchDirection::horizontal;
    const int m = cd.rect.rows, n = cd.rect.cols;
    if (horizontal ? (n % 2 != 0) : (m % 2 != 0))
        throw NotAStretchImage("stretched dimension is odd");
    check_coloured_cover(cd);

    MonodicTiling mt;
    mt.rect = horizontal ? Rect{m, n / 2} : Rect{m / 2, n};

    auto compress = [&](Cell c) -> Cell {
        return horizontal ? Cell{c.row, (c.col + 1) / 2} : Cell{(c.row + 1) / 2, c.col};
    };
    // a domino parallel to the stretch is "aligned" when it is the image of
    // one cell
    auto aligned = [&](const ColouredDomino& d) {
        if (horizontal)
            return d.a.row == d.b.row && d.a.col % 2 == 1 && d.b.col == d.a.col + 1;
        return d.a.col == d.b.col && d.a.row % 2 == 1 && d.b.row == d.a.row + 1;
    };
    auto parallel = [&](const ColouredDomino& d) {
        return horizontal ? d.a.row == d.b.row : d.a.col == d.b.col;
    };

    std::vector<ColouredDomino> dominoes = cd.dominoes;
    for (ColouredDomino& d : dominoes)
        if (d.b < d.a) std::swap(d.a, d.b);

    std::set<Cell> red_parallel_cells;  // compressed halves of parallel red dominoes
    // perpendicular red dominoes grouped by compressed span; the two halves
    // of one original domino share the span
    std::map<std::pair<Cell, Cell>, int> perp_groups;
    for (const ColouredDomino& d : dominoes) {
        if (d.colour == PieceColour::blue) {
            if (!parallel(d) || !aligned(d))
                throw NotAStretchImage("blue domino is not the image of a monomino");
            mt.monominoes.push_back(compress(d.a));
            continue;
        }
        if (parallel(d)) {
            if (!aligned(d)) throw NotAStretchImage("red domino straddles a cell image");
            red_parallel_cells.insert(compress(d.a));
        } else {
            perp_groups[{compress(d.a), compress(d.b)}]++;
        }
    }
    for (const auto& [span, halves] : perp_groups) {
        if (halves != 2)
            throw NotAStretchImage("perpendicular red domino lacks its partner");
        mt.dominoes.push_back({span.first, span.second, std::nullopt});
    }

    // parallel red halves pair up along maximal runs
    std::set<Cell> remaining = red_parallel_cells;
    const Direction run_dir = horizontal ? Direction::right : Direction::down;
    while (!remaining.empty()) {
        Cell start = *remaining.begin();
        // must be the first cell of a run paired with its successor
        const Cell next = step(start, run_dir);
        if (!remaining.count(next))
            throw NotAStretchImage("red halves do not pair into dominoes");
        remaining.erase(start);
        remaining.erase(next);
        mt.dominoes.push_back({start, next, std::nullopt});
    }

    std::sort(mt.dominoes.begin(), mt.dominoes.end());
    std::sort(mt.monominoes.begin(), mt.monominoes.end());
    try {
        check_monodic_cover(mt);
    } catch (const std::invalid_argument& e) {
        throw NotAStretchImage(e.what());
    }
    return mt;
}

MonodicTiling undirected(const MonodicTiling& mt) {
    MonodicTiling out = mt;
    for (DirectedDomino& d : out.dominoes) {
        if (d.tail > d.head) std::swap(d.tail, d.head);
        d.dir = std::nullopt;
    }
    std::sort(out.dominoes.begin(), out.dominoes.end());
    return out;
}

}  // namespace polyfault
