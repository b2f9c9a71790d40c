#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "polyfault/enumerate.hpp"

// Broken-profile dynamic programming. The scan runs cell by cell in
// column-major order along the longer dimension, so the profile window covers
// the shorter dimension m plus two lookahead cells (every piece reaches at
// most m+1 cells past the scan position). State layout, low bits first:
//   bits [0, m+2)       coverage of cells at offsets 0..m+1 from the scan
//   bit  m+2            a piece was anchored in the current column (trominoes
//                       always cross their column boundary, so this is the
//                       fault flag for the vertical line closing the column)
//   bits [m+3, 2m+2)    horizontal lines 2..m already crossed
// Fault bookkeeping is only carried in faultfree mode.

namespace polyfault {

namespace {

using Layer = std::unordered_map<std::uint64_t, mpz_class>;

enum class DpMode { tromino_all, tromino_faultfree, domino };

mpz_class profile_count(Rect rect, DpMode mode) {
    int m = rect.rows, n = rect.cols;
    if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be positive");
    if (m > n) std::swap(m, n);
    if (mode == DpMode::domino) {
        if (rect.area() % 2 != 0) return 0;
    } else {
        if (rect.area() % 3 != 0) return 0;
        if (m < 2) return 0;
    }
    if (m + 3 + (m - 1) > 62) throw std::invalid_argument("profile too wide");

    const bool faultfree = mode == DpMode::tromino_faultfree;
    const std::uint64_t stop_bit = 1ULL << (m + 2);
    const int hshift = m + 3;
    const std::uint64_t hfull = (m > 1 ? (1ULL << (m - 1)) - 1 : 0ULL) << hshift;
    const long long cells = static_cast<long long>(m) * n;

    Layer layer;
    layer.emplace(0, 1);
    Layer next;

    // advance the scan by one cell: shift the window and treat the end of a
    // column as the vertical-line check point
    auto emit = [&](std::uint64_t state, long long p, const mpz_class& ways) {
        std::uint64_t keep = state & ~((1ULL << (m + 2)) - 1);
        std::uint64_t window = (state & ((1ULL << (m + 2)) - 1)) >> 1;
        if ((p + 1) % m == 0) {
            const long long col = p / m + 1;  // 1-based column just finished
            if (faultfree) {
                if (col <= n - 1 && !(state & stop_bit)) return;  // fault line
                keep &= ~stop_bit;
            }
        }
        auto [it, inserted] = next.try_emplace(keep | window, ways);
        if (!inserted) it->second += ways;
    };

    for (long long p = 0; p < cells; ++p) {
        const int r = static_cast<int>(p % m) + 1;
        const int c = static_cast<int>(p / m) + 1;
        next.clear();
        for (const auto& [state, ways] : layer) {
            if (state & 1) {
                emit(state & ~1ULL, p, ways);
                continue;
            }
            if (mode == DpMode::domino) {
                if (r <= m - 1 && !(state & 2))
                    emit(state | 2, p, ways);
                if (c <= n - 1 && !(state & (1ULL << m)))
                    emit(state | (1ULL << m), p, ways);
                continue;
            }
            // L-tromino placements covering the scan cell (r, c); all anchor
            // in column c and span columns c, c+1
            struct Move {
                std::uint64_t add;
                int anchor_row;
            };
            Move moves[4];
            int count = 0;
            if (c <= n - 1) {
                const std::uint64_t up_right = 1ULL << (m - 1);   // (r-1, c+1)
                const std::uint64_t right = 1ULL << m;            // (r,   c+1)
                const std::uint64_t down = 2;                     // (r+1, c)
                const std::uint64_t down_right = 1ULL << (m + 1); // (r+1, c+1)
                if (r >= 2) moves[count++] = {up_right | right, r - 1};  // missing TL
                if (r <= m - 1) {
                    moves[count++] = {down | down_right, r};   // missing TR
                    moves[count++] = {right | down_right, r};  // missing BL
                    moves[count++] = {right | down, r};        // missing BR
                }
            }
            for (int i = 0; i < count; ++i) {
                if (state & moves[i].add) continue;
                std::uint64_t placed = state | moves[i].add;
                if (faultfree)
                    placed |= stop_bit | (1ULL << (hshift + moves[i].anchor_row - 1));
                emit(placed, p, ways);
            }
        }
        layer.swap(next);
    }

    mpz_class total = 0;
    for (const auto& [state, ways] : layer) {
        if (faultfree && (state & hfull) != hfull) continue;
        total += ways;
    }
    return total;
}

}  // namespace

mpz_class count_tromino_dp(Rect rect) { return profile_count(rect, DpMode::tromino_all); }

mpz_class count_faultfree_dp(Rect rect) { return profile_count(rect, DpMode::tromino_faultfree); }

mpz_class count_domino_dp(Rect rect) { return profile_count(rect, DpMode::domino); }

}  // namespace polyfault
