#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "polyfault/grid.hpp"

namespace polyfault {

enum class CountKind { all_tromino, faultfree_tromino, all_domino };
enum class CountMethod { enumerate, dp };

struct CountResult {
    Rect rect;
    CountKind kind = CountKind::all_tromino;
    CountMethod method = CountMethod::dp;
    mpz_class count;
};

enum class EnumMode { all, faultfree };

// Return false to stop the enumeration early.
using TilingVisitor = std::function<bool(const Tiling&)>;

// Streams every tiling of `rect` (filtered by `mode`) in canonical
// lexicographic order of piece lists and returns how many were visited.
// Rectangles whose area is not a multiple of 3 yield 0 immediately.
std::uint64_t enumerate_tilings(Rect rect, EnumMode mode, const TilingVisitor& visitor);

// Count-only form. May explore subtrees in parallel (POLYFAULT_THREADS);
// the result is identical to the sequential count.
std::uint64_t enumerate_tilings(Rect rect, EnumMode mode);

// An exact-crossing requirement on one internal grid line, enforced during
// completion search: exceeding `exact` prunes, finishing below it rejects.
struct LineRequirement {
    enum class Axis { horizontal, vertical };
    Axis axis = Axis::vertical;
    int internal_index = 1;  // line between rows/cols (i, i+1)
    int exact = 2;
};

// Completion of a partially covered rectangle: `fixed_pieces` stay in place,
// the rest is searched. Used by the generative seam search.
struct CompletionProblem {
    Rect rect;
    std::vector<TrominoPlacement> fixed_pieces;
    EnumMode mode = EnumMode::faultfree;
    std::vector<LineRequirement> requirements;
};

// Canonically first completion, or nullopt when the search space is exhausted.
std::optional<Tiling> first_completion(const CompletionProblem& problem);

// Exact counts via broken-profile DP over the shorter dimension. All three
// agree with the corresponding enumeration and return 0 when the divisibility
// gate fails (3 | mn for trominoes, 2 | mn for dominoes).
mpz_class count_tromino_dp(Rect rect);
mpz_class count_faultfree_dp(Rect rect);
mpz_class count_domino_dp(Rect rect);

// Worker-thread cap from POLYFAULT_THREADS (>= 1; defaults to 1).
int worker_thread_budget();

}  // namespace polyfault
