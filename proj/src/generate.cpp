#include "polyfault/generate.hpp"

#include <algorithm>
#include <string>

#include "polyfault/enumerate.hpp"
#include "polyfault/fault.hpp"
#include "polyfault/json_io.hpp"

namespace polyfault {

namespace basis_data {
extern const char* const entries[];
extern const int entry_count;
}  // namespace basis_data

const std::map<std::pair<int, int>, Tiling>& basis_catalog() {
    static const std::map<std::pair<int, int>, Tiling> catalog = [] {
        std::map<std::pair<int, int>, Tiling> m;
        for (int i = 0; i < basis_data::entry_count; ++i) {
            Tiling t = tiling_from_json(basis_data::entries[i]);
            m.emplace(std::make_pair(t.rect.rows, t.rect.cols), std::move(t));
        }
        return m;
    }();
    return catalog;
}

Tiling basis_tiling(int i, int j) {
    const auto& catalog = basis_catalog();
    const auto it = catalog.find({i, j});
    if (it == catalog.end())
        throw std::invalid_argument("no basis tiling for R(" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    return it->second;
}

namespace {

// Extension to the right with optional exact-crossing constraints; every
// other side reduces to this one by transposing or mirroring coordinates.
Tiling extend_right(const Tiling& t, int width,
                    const std::vector<LineRequirement>& extra_requirements) {
    const int m = t.rect.rows;
    const int n = t.rect.cols;
    if (m < 4) throw std::invalid_argument("extension needs at least four rows");
    if (width < 3 || width > n) throw std::invalid_argument("bad seam width");

    CompletionProblem problem;
    problem.rect = Rect{m, n + 6};
    problem.mode = EnumMode::faultfree;
    problem.requirements = extra_requirements;
    const int seam_first_col = n - width + 1;
    for (const TrominoPlacement& p : t.pieces) {
        bool in_seam = false;
        for (const Cell& cell : cells_of(p))
            if (cell.col >= seam_first_col) in_seam = true;
        if (!in_seam) problem.fixed_pieces.push_back(p);
    }
    auto completion = first_completion(problem);
    if (!completion) return Tiling{};  // caller widens or fails
    return *completion;
}

Tiling mirror_columns(const Tiling& t) {
    Tiling out;
    out.rect = t.rect;
    out.pieces.reserve(t.pieces.size());
    for (const TrominoPlacement& p : t.pieces) {
        Corner m = p.missing;
        switch (m) {
            case Corner::TL: m = Corner::TR; break;
            case Corner::TR: m = Corner::TL; break;
            case Corner::BL: m = Corner::BR; break;
            case Corner::BR: m = Corner::BL; break;
        }
        out.pieces.push_back({Cell{p.anchor.row, t.rect.cols - p.anchor.col}, m});
    }
    canonicalize(out);
    return out;
}

std::vector<LineRequirement> mirror_requirements(const std::vector<LineRequirement>& reqs,
                                                 int new_cols) {
    std::vector<LineRequirement> out = reqs;
    for (LineRequirement& r : out)
        if (r.axis == LineRequirement::Axis::vertical)
            r.internal_index = new_cols - r.internal_index;
    return out;
}

std::vector<LineRequirement> transpose_requirements(const std::vector<LineRequirement>& reqs) {
    std::vector<LineRequirement> out = reqs;
    for (LineRequirement& r : out)
        r.axis = r.axis == LineRequirement::Axis::vertical ? LineRequirement::Axis::horizontal
                                                           : LineRequirement::Axis::vertical;
    return out;
}

Tiling extend_six_impl(const Tiling& t, const SeamWindow& window,
                       const std::vector<LineRequirement>& requirements) {
    if (auto v = validate(t)) throw std::invalid_argument("invalid tiling: " + v->describe());
    if (!is_faultfree(t)) throw std::invalid_argument("extension needs a faultfree tiling");

    auto attempt = [&](int width) -> Tiling {
        switch (window.side) {
            case Side::right:
                return extend_right(t, width, requirements);
            case Side::left: {
                // mirror, extend right, mirror back (requirements live in the
                // extended rectangle's coordinates)
                Tiling mirrored = mirror_columns(t);
                Tiling grown = extend_right(mirrored, width,
                                            mirror_requirements(requirements, t.rect.cols + 6));
                return grown.pieces.empty() ? grown : mirror_columns(grown);
            }
            case Side::bottom: {
                Tiling grown = extend_right(transpose(t), width, transpose_requirements(requirements));
                return grown.pieces.empty() ? grown : transpose(grown);
            }
            case Side::top: {
                Tiling flipped = transpose(mirror_columns(transpose(t)));  // mirror rows
                Tiling grown = extend_six_impl(flipped, {window.width, Side::bottom}, requirements);
                return transpose(mirror_columns(transpose(grown)));
            }
        }
        return Tiling{};
    };

    for (int width : {window.width, window.width + 1}) {
        if (window.side == Side::top) {
            // row mirroring already handled the retry inside the bottom call
            Tiling result = attempt(window.width);
            if (!result.pieces.empty()) return result;
            break;
        }
        Tiling result = attempt(width);
        if (!result.pieces.empty()) {
            if (auto v = validate(result))
                throw std::logic_error("extension produced an invalid tiling: " + v->describe());
            return result;
        }
    }
    throw NoExtensionFound("no faultfree extension by six found");
}

}  // namespace

Tiling extend_six(const Tiling& t, const SeamWindow& window) {
    return extend_six_impl(t, window, {});
}

Tiling construct_faultfree(int m, int n) {
    if (m < 4 || n < 4)
        throw std::invalid_argument("faultfree tilings need both sides >= 4 (no R(3,n) works)");
    if (static_cast<long long>(m) * n % 3 != 0)
        throw std::invalid_argument("area must be divisible by 3");

    const bool transposed = n % 3 != 0;
    if (transposed) std::swap(m, n);

    const int i = 4 + (m - 4) % 6;
    const int a = (m - i) / 6;
    const int j = n % 6 == 0 ? 6 : 9;
    const int b = (n - j) / 6;

    Tiling t = basis_tiling(i, j);
    for (int k = 0; k < a; ++k) t = extend_six(t, {4, Side::bottom});
    for (int k = 0; k < b; ++k) t = extend_six(t, {4, Side::right});

    if (transposed) t = transpose(t);
    if (!is_faultfree(t)) throw std::logic_error("construction produced a faulted tiling");
    return t;
}

Tiling construct_min_crossing(int m, int n) {
    if (m < 10 || n < 10)
        throw std::invalid_argument("minimum-crossing construction needs m,n >= 10");
    if (static_cast<long long>(m) * n % 3 != 0)
        throw std::invalid_argument("area must be divisible by 3");

    Tiling core = construct_faultfree(m - 6, n - 6);

    // grow columns: the former right edge, vertical line n-6, ends with
    // exactly two crossings
    std::vector<LineRequirement> col_req{
        {LineRequirement::Axis::vertical, n - 6, 2}};
    Tiling wide = extend_six_impl(core, {4, Side::right}, col_req);

    // grow rows: the former bottom edge gets exactly two crossings while the
    // column seam keeps its two
    std::vector<LineRequirement> row_req{
        {LineRequirement::Axis::horizontal, m - 6, 2},
        {LineRequirement::Axis::vertical, n - 6, 2}};
    Tiling full = extend_six_impl(wide, {4, Side::bottom}, row_req);

    const CrossingNumbers cn = crossing_numbers(full);
    if (cn.horizontal_cn > 2 || cn.vertical_cn > 2)
        throw std::logic_error("construction exceeded the crossing bound");
    return full;
}

}  // namespace polyfault
