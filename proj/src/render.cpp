#include "polyfault/render.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace polyfault {

static std::vector<int> piece_index_grid(const Tiling& t) {
    if (auto v = validate(t)) throw std::invalid_argument("invalid tiling: " + v->describe());
    std::vector<int> grid(static_cast<std::size_t>(t.rect.rows) * t.rect.cols, -1);
    for (std::size_t i = 0; i < t.pieces.size(); ++i)
        for (const Cell& c : cells_of(t.pieces[i]))
            grid[static_cast<std::size_t>(c.row - 1) * t.rect.cols + (c.col - 1)] =
                static_cast<int>(i);
    return grid;
}

std::string render_ascii(const Tiling& t) {
    static const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
        "!#$%&()*+./:;<=>?@[]^_{|}~";
    if (t.pieces.size() > alphabet.size())
        throw std::invalid_argument("too many pieces for distinct letters");
    const auto grid = piece_index_grid(t);
    std::string out;
    out.reserve(static_cast<std::size_t>(t.rect.rows) * (t.rect.cols + 1));
    for (int r = 0; r < t.rect.rows; ++r) {
        for (int c = 0; c < t.rect.cols; ++c)
            out += alphabet[grid[static_cast<std::size_t>(r) * t.rect.cols + c]];
        out += '\n';
    }
    return out;
}

std::string render_svg(const Tiling& t) {
    const auto grid = piece_index_grid(t);
    const int m = t.rect.rows, n = t.rect.cols;
    const int unit = 24, margin = 8;
    auto at = [&](int r, int c) { return grid[static_cast<std::size_t>(r) * n + c]; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * unit + 2 * margin
        << "\" height=\"" << m * unit + 2 * margin << "\" viewBox=\"0 0 "
        << n * unit + 2 * margin << " " << m * unit + 2 * margin << "\">\n";
    static const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                    "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                    "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            svg << "  <rect x=\"" << margin + c * unit << "\" y=\"" << margin + r * unit
                << "\" width=\"" << unit << "\" height=\"" << unit << "\" fill=\""
                << palette[at(r, c) % 12] << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    // piece outlines: edges where the neighbouring cell belongs elsewhere
    svg << "  <g stroke=\"#222222\" stroke-width=\"2\" stroke-linecap=\"square\">\n";
    auto line = [&](int x1, int y1, int x2, int y2) {
        svg << "    <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
            << y2 << "\"/>\n";
    };
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            const int x = margin + c * unit, y = margin + r * unit;
            if (r == 0 || at(r - 1, c) != at(r, c)) line(x, y, x + unit, y);
            if (r == m - 1 || at(r + 1, c) != at(r, c)) line(x, y + unit, x + unit, y + unit);
            if (c == 0 || at(r, c - 1) != at(r, c)) line(x, y, x, y + unit);
            if (c == n - 1 || at(r, c + 1) != at(r, c)) line(x + unit, y, x + unit, y + unit);
        }
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace polyfault
