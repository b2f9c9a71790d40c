#pragma once

#include <string>

#include "polyfault/grid.hpp"

namespace polyfault {

// One printable letter per piece, row per grid row. Distinct pieces get
// distinct letters (the alphabet holds 88 symbols, enough for the rectangles
// the search engines handle).
std::string render_ascii(const Tiling& t);

// Unit-square grid with piece outlines.
std::string render_svg(const Tiling& t);

}  // namespace polyfault
