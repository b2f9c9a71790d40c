#include "polyfault/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyfault {

bool tromino_tileable(Rect r) {
    return r.rows >= 2 && r.cols >= 2 && r.area() % 3 == 0;
}

std::string_view corner_name(Corner c) {
    switch (c) {
        case Corner::TL: return "TL";
        case Corner::TR: return "TR";
        case Corner::BL: return "BL";
        case Corner::BR: return "BR";
    }
    return "??";
}

std::optional<Corner> corner_from_name(std::string_view name) {
    if (name == "TL") return Corner::TL;
    if (name == "TR") return Corner::TR;
    if (name == "BL") return Corner::BL;
    if (name == "BR") return Corner::BR;
    return std::nullopt;
}

std::array<Cell, 3> cells_of(const TrominoPlacement& p) {
    const int r = p.anchor.row;
    const int c = p.anchor.col;
    switch (p.missing) {
        case Corner::TL: return {{{r, c + 1}, {r + 1, c}, {r + 1, c + 1}}};
        case Corner::TR: return {{{r, c}, {r + 1, c}, {r + 1, c + 1}}};
        case Corner::BL: return {{{r, c}, {r, c + 1}, {r + 1, c + 1}}};
        case Corner::BR: return {{{r, c}, {r, c + 1}, {r + 1, c}}};
    }
    return {};
}

std::string Violation::describe() const {
    switch (kind) {
        case Kind::overlap:
            return "overlap at cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
        case Kind::gap:
            return "gap at cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
        case Kind::out_of_bounds:
            return "piece " + std::to_string(index) + " out of bounds";
        case Kind::order_violation:
            return "piece " + std::to_string(index) + " breaks canonical order";
    }
    return "unknown violation";
}

void canonicalize(Tiling& t) {
    std::sort(t.pieces.begin(), t.pieces.end());
}

std::optional<Violation> validate(const Tiling& t) {
    const int m = t.rect.rows;
    const int n = t.rect.cols;
    if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be positive");

    std::vector<char> covered(static_cast<std::size_t>(m) * n, 0);
    for (std::size_t i = 0; i < t.pieces.size(); ++i) {
        for (const Cell& cell : cells_of(t.pieces[i])) {
            if (cell.row < 1 || cell.row > m || cell.col < 1 || cell.col > n)
                return Violation{Violation::Kind::out_of_bounds, cell, static_cast<int>(i)};
            char& mark = covered[static_cast<std::size_t>(cell.row - 1) * n + (cell.col - 1)];
            if (mark) return Violation{Violation::Kind::overlap, cell, static_cast<int>(i)};
            mark = 1;
        }
    }
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c)
            if (!covered[static_cast<std::size_t>(r - 1) * n + (c - 1)])
                return Violation{Violation::Kind::gap, Cell{r, c}, -1};
    for (std::size_t i = 1; i < t.pieces.size(); ++i)
        if (!(t.pieces[i - 1] < t.pieces[i]))
            return Violation{Violation::Kind::order_violation, Cell{}, static_cast<int>(i)};
    return std::nullopt;
}

Tiling transpose(const Tiling& t) {
    Tiling out;
    out.rect = Rect{t.rect.cols, t.rect.rows};
    out.pieces.reserve(t.pieces.size());
    for (const TrominoPlacement& p : t.pieces) {
        Corner m = p.missing;
        if (m == Corner::TR) m = Corner::BL;
        else if (m == Corner::BL) m = Corner::TR;
        out.pieces.push_back({Cell{p.anchor.col, p.anchor.row}, m});
    }
    canonicalize(out);
    return out;
}

Tiling flip(const Tiling& t) {
    Tiling out;
    out.rect = t.rect;
    out.pieces.reserve(t.pieces.size());
    for (const TrominoPlacement& p : t.pieces) {
        Corner m = p.missing;
        switch (m) {
            case Corner::TL: m = Corner::BL; break;
            case Corner::BL: m = Corner::TL; break;
            case Corner::TR: m = Corner::BR; break;
            case Corner::BR: m = Corner::TR; break;
        }
        // the 2x2 box over rows (a, a+1) mirrors to rows (m-a, m-a+1)
        out.pieces.push_back({Cell{t.rect.rows - p.anchor.row, p.anchor.col}, m});
    }
    canonicalize(out);
    return out;
}

}  // namespace polyfault
