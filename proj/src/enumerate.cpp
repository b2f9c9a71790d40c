#include "polyfault/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <thread>

namespace polyfault {

int worker_thread_budget() {
    static const int budget = [] {
        const char* env = std::getenv("POLYFAULT_THREADS");
        if (!env) return 1;
        const long v = std::strtol(env, nullptr, 10);
        return v >= 1 ? static_cast<int>(std::min(v, 256L)) : 1;
    }();
    return budget;
}

namespace {

constexpr int kMaxWords = 16;  // 1024 cells

struct SearchState {
    std::array<std::uint64_t, kMaxWords> cover{};
    std::vector<int> hcross, vcross;  // crossings per internal line
    std::vector<int> avail_h, avail_v;  // adjacent uncovered pairs straddling the line
    std::vector<TrominoPlacement> placed;
    long long from = 0;
};

// First-uncovered-cell backtracking in row-major scan order, which visits
// tilings in canonical lexicographic order of their piece lists. Fault
// pruning rests on one fact: a line can still be crossed iff some pair of
// adjacent uncovered cells straddles it, so a zero-crossing line whose pair
// count hits zero kills the branch.
struct Searcher {
    int m = 0, n = 0;
    int words = 0;
    long long cells = 0;
    EnumMode mode = EnumMode::all;
    std::vector<int> hmin, vmin;  // required crossings (1 in faultfree mode)
    std::vector<int> hcap, vcap;  // allowed crossings (exact requirements)
    std::vector<TrominoPlacement> fixed;
    const TilingVisitor* visitor = nullptr;
    std::uint64_t count = 0;
    bool stopped = false;

    bool init(Rect rect, const std::vector<TrominoPlacement>& fixed_pieces,
              const std::vector<LineRequirement>& requirements, SearchState& s) {
        m = rect.rows;
        n = rect.cols;
        cells = rect.area();
        if (cells > 64LL * kMaxWords) throw std::invalid_argument("rectangle too large to search");
        words = static_cast<int>((cells + 63) / 64);
        s.hcross.assign(std::max(m - 1, 0), 0);
        s.vcross.assign(std::max(n - 1, 0), 0);
        s.avail_h.assign(std::max(m - 1, 0), n);
        s.avail_v.assign(std::max(n - 1, 0), m);
        const int required = mode == EnumMode::faultfree ? 1 : 0;
        hmin.assign(std::max(m - 1, 0), required);
        vmin.assign(std::max(n - 1, 0), required);
        hcap.assign(std::max(m - 1, 0), INT_MAX);
        vcap.assign(std::max(n - 1, 0), INT_MAX);
        for (const LineRequirement& req : requirements) {
            const bool horizontal = req.axis == LineRequirement::Axis::horizontal;
            auto& mins = horizontal ? hmin : vmin;
            auto& caps = horizontal ? hcap : vcap;
            if (req.internal_index < 1 || req.internal_index > static_cast<int>(mins.size()))
                throw std::invalid_argument("line requirement outside the rectangle");
            mins[req.internal_index - 1] = std::max(mins[req.internal_index - 1], req.exact);
            caps[req.internal_index - 1] = req.exact;
        }
        // cells past the end stay marked covered so the scan never stops there
        for (long long i = cells; i < 64LL * words; ++i)
            s.cover[i >> 6] |= 1ULL << (i & 63);
        fixed = fixed_pieces;
        for (const TrominoPlacement& p : fixed) {
            for (const Cell& cell : cells_of(p)) {
                if (cell.row < 1 || cell.row > m || cell.col < 1 || cell.col > n) return false;
                if (covered(s, cell.row, cell.col)) return false;
                cover_cell(s, cell.row, cell.col);
            }
            if (s.hcross[p.anchor.row - 1]++ >= hcap[p.anchor.row - 1]) return false;
            if (s.vcross[p.anchor.col - 1]++ >= vcap[p.anchor.col - 1]) return false;
        }
        for (int i = 1; i <= m - 1; ++i)
            if (s.hcross[i - 1] < hmin[i - 1] && s.avail_h[i - 1] == 0) return false;
        for (int j = 1; j <= n - 1; ++j)
            if (s.vcross[j - 1] < vmin[j - 1] && s.avail_v[j - 1] == 0) return false;
        return true;
    }

    bool covered(const SearchState& s, int r, int c) const {
        const long long idx = static_cast<long long>(r - 1) * n + (c - 1);
        return s.cover[idx >> 6] & (1ULL << (idx & 63));
    }

    // covering a cell retires the uncovered pairs it belonged to
    void cover_cell(SearchState& s, int r, int c) const {
        const long long idx = static_cast<long long>(r - 1) * n + (c - 1);
        s.cover[idx >> 6] |= 1ULL << (idx & 63);
        if (c > 1 && !covered(s, r, c - 1)) s.avail_v[c - 2]--;
        if (c < n && !covered(s, r, c + 1)) s.avail_v[c - 1]--;
        if (r > 1 && !covered(s, r - 1, c)) s.avail_h[r - 2]--;
        if (r < m && !covered(s, r + 1, c)) s.avail_h[r - 1]--;
    }

    void uncover_cell(SearchState& s, int r, int c) const {
        const long long idx = static_cast<long long>(r - 1) * n + (c - 1);
        s.cover[idx >> 6] &= ~(1ULL << (idx & 63));
        if (c > 1 && !covered(s, r, c - 1)) s.avail_v[c - 2]++;
        if (c < n && !covered(s, r, c + 1)) s.avail_v[c - 1]++;
        if (r > 1 && !covered(s, r - 1, c)) s.avail_h[r - 2]++;
        if (r < m && !covered(s, r + 1, c)) s.avail_h[r - 1]++;
    }

    bool place(SearchState& s, const TrominoPlacement& p) const {
        const int a = p.anchor.row, b = p.anchor.col;
        if (s.hcross[a - 1] >= hcap[a - 1] || s.vcross[b - 1] >= vcap[b - 1]) return false;
        for (const Cell& cell : cells_of(p)) cover_cell(s, cell.row, cell.col);
        s.hcross[a - 1]++;
        s.vcross[b - 1]++;
        // lines whose pair counts this piece may have exhausted
        for (int i = std::max(a - 1, 1); i <= std::min(a + 1, m - 1); ++i)
            if (s.hcross[i - 1] < hmin[i - 1] && s.avail_h[i - 1] == 0) {
                unplace(s, p);
                return false;
            }
        for (int j = std::max(b - 1, 1); j <= std::min(b + 1, n - 1); ++j)
            if (s.vcross[j - 1] < vmin[j - 1] && s.avail_v[j - 1] == 0) {
                unplace(s, p);
                return false;
            }
        return true;
    }

    void unplace(SearchState& s, const TrominoPlacement& p) const {
        const auto cs = cells_of(p);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it)
            uncover_cell(s, it->row, it->col);
        s.hcross[p.anchor.row - 1]--;
        s.vcross[p.anchor.col - 1]--;
    }

    long long first_uncovered(const SearchState& s, long long from) const {
        if (from >= cells) return -1;
        int w = static_cast<int>(from >> 6);
        std::uint64_t word = ~s.cover[w] & (~0ULL << (from & 63));
        while (true) {
            if (word) return (static_cast<long long>(w) << 6) + std::countr_zero(word);
            if (++w >= words) return -1;
            word = ~s.cover[w];
        }
    }

    void finish(SearchState& s) {
        for (int i = 1; i <= m - 1; ++i)
            if (s.hcross[i - 1] < hmin[i - 1]) return;
        for (int j = 1; j <= n - 1; ++j)
            if (s.vcross[j - 1] < vmin[j - 1]) return;
        ++count;
        if (visitor) {
            Tiling t;
            t.rect = Rect{m, n};
            t.pieces = fixed;
            t.pieces.insert(t.pieces.end(), s.placed.begin(), s.placed.end());
            canonicalize(t);
            if (!(*visitor)(t)) stopped = true;
        }
    }

    // The four placements covering the first uncovered cell, in canonical order.
    template <typename Fn>
    void for_each_candidate(const SearchState& s, int r, int c, const Fn& fn) const {
        if (c >= 2 && r <= m - 1 && !covered(s, r + 1, c - 1) && !covered(s, r + 1, c))
            fn(TrominoPlacement{{r, c - 1}, Corner::TL});
        if (r <= m - 1 && c <= n - 1) {
            const bool below = !covered(s, r + 1, c);
            const bool right = !covered(s, r, c + 1);
            const bool diag = !covered(s, r + 1, c + 1);
            if (below && diag) fn(TrominoPlacement{{r, c}, Corner::TR});
            if (right && diag) fn(TrominoPlacement{{r, c}, Corner::BL});
            if (right && below) fn(TrominoPlacement{{r, c}, Corner::BR});
        }
    }

    void dfs(SearchState& s) {
        if (stopped) return;
        const long long pos = first_uncovered(s, s.from);
        if (pos < 0) {
            finish(s);
            return;
        }
        const long long saved_from = s.from;
        s.from = pos;
        const int r = static_cast<int>(pos / n) + 1;
        const int c = static_cast<int>(pos % n) + 1;
        for_each_candidate(s, r, c, [&](const TrominoPlacement& p) {
            if (stopped || !place(s, p)) return;
            s.placed.push_back(p);
            dfs(s);
            s.placed.pop_back();
            unplace(s, p);
        });
        s.from = saved_from;
    }

    // Expands the shallowest frontier nodes breadth-first until there are
    // enough independent subtrees to keep `threads` workers busy.
    std::uint64_t count_parallel(SearchState root, int threads) {
        std::deque<SearchState> frontier;
        frontier.push_back(std::move(root));
        const std::size_t target = static_cast<std::size_t>(threads) * 8;
        while (!frontier.empty() && frontier.size() < target) {
            SearchState s = std::move(frontier.front());
            frontier.pop_front();
            const long long pos = first_uncovered(s, s.from);
            if (pos < 0) {
                finish(s);
                continue;
            }
            s.from = pos;
            const int r = static_cast<int>(pos / n) + 1;
            const int c = static_cast<int>(pos % n) + 1;
            for_each_candidate(s, r, c, [&](const TrominoPlacement& p) {
                SearchState child = s;
                if (!place(child, p)) return;
                child.placed.push_back(p);
                frontier.push_back(std::move(child));
            });
        }
        std::vector<SearchState> work(frontier.begin(), frontier.end());
        std::atomic<std::size_t> next{0};
        std::atomic<std::uint64_t> total{0};
        auto worker = [&] {
            Searcher local = *this;
            local.visitor = nullptr;
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= work.size()) break;
                local.count = 0;
                SearchState s = work[i];
                local.dfs(s);
                total.fetch_add(local.count);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        return count + total.load();
    }
};

}  // namespace

std::uint64_t enumerate_tilings(Rect rect, EnumMode mode, const TilingVisitor& visitor) {
    if (rect.rows < 1 || rect.cols < 1) throw std::invalid_argument("rectangle sides must be positive");
    if (rect.area() % 3 != 0) return 0;
    Searcher searcher;
    searcher.mode = mode;
    searcher.visitor = visitor ? &visitor : nullptr;
    SearchState state;
    if (!searcher.init(rect, {}, {}, state)) return 0;
    searcher.dfs(state);
    return searcher.count;
}

std::uint64_t enumerate_tilings(Rect rect, EnumMode mode) {
    if (rect.rows < 1 || rect.cols < 1) throw std::invalid_argument("rectangle sides must be positive");
    if (rect.area() % 3 != 0) return 0;
    Searcher searcher;
    searcher.mode = mode;
    SearchState state;
    if (!searcher.init(rect, {}, {}, state)) return 0;
    const int threads = worker_thread_budget();
    if (threads <= 1) {
        searcher.dfs(state);
        return searcher.count;
    }
    return searcher.count_parallel(std::move(state), threads);
}

std::optional<Tiling> first_completion(const CompletionProblem& problem) {
    if (problem.rect.rows < 1 || problem.rect.cols < 1)
        throw std::invalid_argument("rectangle sides must be positive");
    std::optional<Tiling> result;
    TilingVisitor take_first = [&](const Tiling& t) {
        result = t;
        return false;
    };
    Searcher searcher;
    searcher.mode = problem.mode;
    searcher.visitor = &take_first;
    SearchState state;
    if (!searcher.init(problem.rect, problem.fixed_pieces, problem.requirements, state))
        return std::nullopt;
    searcher.dfs(state);
    return result;
}

}  // namespace polyfault
