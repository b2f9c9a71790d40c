#pragma once

#include <string>

#include "polyfault/grid.hpp"
#include "polyfault/monodic_types.hpp"

namespace polyfault {

// Tiling document: {"rows": m, "cols": n, "pieces": [{"r":..,"c":..,"missing":"TL"},...]}
// Pieces are serialized in canonical order, so serialize/parse/serialize is
// byte-identical for canonical tilings.
std::string tiling_to_json(const Tiling& t);

// Parses and canonicalizes. Throws std::invalid_argument on malformed input;
// set `check` to also reject documents that are not valid exact covers.
Tiling tiling_from_json(const std::string& text, bool check = true);

std::string monodic_to_json(const MonodicTiling& mt);
std::string coloured_to_json(const ColouredDominoTiling& cd);

}  // namespace polyfault
