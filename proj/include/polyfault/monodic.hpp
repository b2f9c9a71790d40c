#pragma once

#include <stdexcept>

#include "polyfault/grid.hpp"
#include "polyfault/monodic_types.hpp"

namespace polyfault {

struct InvalidMonodic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAStretchImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tromino -> (directed domino, monomino). Per orientation the domino is the
// corner cell plus one end, the arrow runs along the domino towards the
// corner, and the monomino is the cell to the right of the arrow at its head
// (the remaining end). The assignment is unique, so the map is injective.
MonodicTiling to_monodic(const Tiling& t);

// Left inverse of to_monodic: reattach each monomino to the right of its
// domino's arrow. Throws InvalidMonodic when arrows are missing, misaligned,
// point at no monomino, or the reassembled pieces do not tile the rectangle.
Tiling from_monodic(const MonodicTiling& mt);

enum class StretchDirection { horizontal, vertical };

// Doubles one dimension: every cell becomes a 1x2 (or 2x1) block, monominoes
// become blue dominoes and each domino cell becomes a red domino parallel to
// its original. Arrows are not carried over.
ColouredDominoTiling stretch(const MonodicTiling& mt, StretchDirection dir);

// Inverse of stretch on its image; the recovered monodic tiling carries no
// arrows. Throws NotAStretchImage when the coloured tiling is not a stretch
// image (misaligned blocks, unpaired red halves, odd runs).
MonodicTiling unstretch(const ColouredDominoTiling& cd, StretchDirection dir);

// Arrow-stripped copy, for comparing against unstretch output.
MonodicTiling undirected(const MonodicTiling& mt);

}  // namespace polyfault
