#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "polyfault/enumerate.hpp"
#include "polyfault/json_io.hpp"
#include "polyfault/monodic.hpp"

using namespace polyfault;

namespace {

std::string coloured_key(const ColouredDominoTiling& cd) {
    std::ostringstream key;
    for (const ColouredDomino& d : cd.dominoes)
        key << d.a.row << "," << d.a.col << "," << d.b.row << "," << d.b.col << ","
            << static_cast<int>(d.colour) << ";";
    return key.str();
}

}  // namespace

TEST_CASE("R(2,3) maps to two directed dominoes plus two monominoes") {
    int seen = 0;
    enumerate_tilings({2, 3}, EnumMode::all, [&](const Tiling& t) {
        ++seen;
        const MonodicTiling mt = to_monodic(t);
        CHECK(mt.dominoes.size() == 2);
        CHECK(mt.monominoes.size() == 2);
        for (const DirectedDomino& d : mt.dominoes) {
            REQUIRE(d.dir.has_value());
            CHECK(step(d.tail, *d.dir) == d.head);
            // the companion monomino sits to the right of the arrow head
            const Cell slot = step(d.head, rot90cw(*d.dir));
            CHECK(std::count(mt.monominoes.begin(), mt.monominoes.end(), slot) == 1);
        }
        return true;
    });
    CHECK(seen == 2);
}

TEST_CASE("to_monodic is injective and from_monodic inverts it") {
    for (Rect r : {Rect{2, 3}, Rect{2, 6}, Rect{3, 4}, Rect{4, 3}, Rect{4, 6}}) {
        std::set<std::string> images;
        long long total = 0;
        enumerate_tilings(r, EnumMode::all, [&](const Tiling& t) {
            ++total;
            const MonodicTiling mt = to_monodic(t);
            images.insert(monodic_to_json(mt));
            CHECK(from_monodic(mt) == t);
            return true;
        });
        CAPTURE(r.rows); CAPTURE(r.cols);
        CHECK(static_cast<long long>(images.size()) == total);
    }
}

TEST_CASE("a reversed arrow is rejected") {
    Tiling t;
    enumerate_tilings({2, 3}, EnumMode::all, [&](const Tiling& found) {
        t = found;
        return false;
    });
    MonodicTiling mt = to_monodic(t);
    mt.dominoes[0].dir = opposite(*mt.dominoes[0].dir);
    CHECK_THROWS_AS(from_monodic(mt), InvalidMonodic);
}

TEST_CASE("stretching R(2,3) reaches R(2,6) and R(4,3) with the right piece mix") {
    enumerate_tilings({2, 3}, EnumMode::all, [&](const Tiling& t) {
        const MonodicTiling mt = to_monodic(t);
        const ColouredDominoTiling wide = stretch(mt, StretchDirection::horizontal);
        CHECK(wide.rect == Rect{2, 6});
        const ColouredDominoTiling tall = stretch(mt, StretchDirection::vertical);
        CHECK(tall.rect == Rect{4, 3});
        for (const ColouredDominoTiling& cd : {wide, tall}) {
            int blue = 0;
            for (const ColouredDomino& d : cd.dominoes)
                if (d.colour == PieceColour::blue) ++blue;
            CHECK(cd.dominoes.size() == 6);  // mn dominoes in total
            CHECK(blue == 2);                // mn/3 stay blue
        }
        return true;
    });
}

TEST_CASE("unstretch inverts stretch up to arrows") {
    for (Rect r : {Rect{2, 3}, Rect{4, 6}}) {
        enumerate_tilings(r, EnumMode::all, [&](const Tiling& t) {
            const MonodicTiling mt = to_monodic(t);
            for (auto dir : {StretchDirection::horizontal, StretchDirection::vertical}) {
                const MonodicTiling back = unstretch(stretch(mt, dir), dir);
                CHECK(back == undirected(mt));
            }
            return true;
        });
    }
}

TEST_CASE("stretch of coloured monodic tilings is injective (full chain)") {
    for (Rect r : {Rect{2, 3}, Rect{2, 6}, Rect{3, 4}, Rect{4, 3}, Rect{4, 6}}) {
        std::set<std::string> images;
        long long total = 0;
        enumerate_tilings(r, EnumMode::all, [&](const Tiling& t) {
            ++total;
            images.insert(coloured_key(stretch(to_monodic(t), StretchDirection::horizontal)));
            return true;
        });
        CAPTURE(r.rows); CAPTURE(r.cols);
        CHECK(static_cast<long long>(images.size()) == total);
    }
}

TEST_CASE("a brick-offset domino tiling of R(3,4) is not a stretch image") {
    // horizontal dominoes offset between rows: the middle row straddles the
    // cell-image boundary, so no colouring unstretches
    ColouredDominoTiling cd;
    cd.rect = {3, 4};
    const std::vector<ColouredDomino> base = {
        {{1, 1}, {1, 2}, PieceColour::red}, {{1, 3}, {1, 4}, PieceColour::red},
        {{2, 2}, {2, 3}, PieceColour::red}, {{2, 1}, {3, 1}, PieceColour::red},
        {{2, 4}, {3, 4}, PieceColour::red}, {{3, 2}, {3, 3}, PieceColour::red},
    };
    for (int mask = 0; mask < 64; ++mask) {
        cd.dominoes = base;
        for (int i = 0; i < 6; ++i)
            cd.dominoes[i].colour = (mask >> i) & 1 ? PieceColour::blue : PieceColour::red;
        CHECK_THROWS_AS(unstretch(cd, StretchDirection::horizontal), NotAStretchImage);
    }
}

TEST_CASE("coloured tilings that do unstretch biject with monodic tilings") {
    // images of R(2,3) under horizontal stretch live in R(2,6); brute force
    // every domino tiling of R(2,6) and every colouring
    std::vector<std::vector<ColouredDomino>> tilings;
    struct Gen {
        std::vector<ColouredDomino> current;
        std::vector<std::vector<ColouredDomino>>& out;
        bool used[2][6] = {};
        void fill(int r, int c) {
            if (c == 6) {
                ++r;
                c = 0;
            }
            if (r == 2) {
                out.push_back(current);
                return;
            }
            if (used[r][c]) {
                fill(r, c + 1);
                return;
            }
            used[r][c] = true;
            if (c + 1 < 6 && !used[r][c + 1]) {
                used[r][c + 1] = true;
                current.push_back({{r + 1, c + 1}, {r + 1, c + 2}, PieceColour::red});
                fill(r, c + 1);
                current.pop_back();
                used[r][c + 1] = false;
            }
            if (r + 1 < 2) {
                used[r + 1][c] = true;
                current.push_back({{r + 1, c + 1}, {r + 2, c + 1}, PieceColour::red});
                fill(r, c + 1);
                current.pop_back();
                used[r + 1][c] = false;
            }
            used[r][c] = false;
        }
    } gen{{}, tilings};
    gen.fill(0, 0);
    REQUIRE(tilings.size() == 13);  // N_D(2,6)

    std::set<std::string> recovered;
    long long stretchable = 0;
    for (const auto& base : tilings) {
        for (int mask = 0; mask < (1 << base.size()); ++mask) {
            ColouredDominoTiling cd;
            cd.rect = {2, 6};
            cd.dominoes = base;
            for (std::size_t i = 0; i < base.size(); ++i)
                cd.dominoes[i].colour = (mask >> i) & 1 ? PieceColour::blue : PieceColour::red;
            try {
                const MonodicTiling mt = unstretch(cd, StretchDirection::horizontal);
                ++stretchable;
                recovered.insert(monodic_to_json(mt));
                // round trip back to the same coloured tiling
                CHECK(coloured_key(stretch(mt, StretchDirection::horizontal)) ==
                      coloured_key(cd));
            } catch (const NotAStretchImage&) {
            }
        }
    }
    // 10 monodic tilings of R(2,3): ten disjoint pairs of dominoes in the
    // 2x3 box (counted by hand), monominoes on the remaining cells
    CHECK(stretchable == 10);
    CHECK(static_cast<long long>(recovered.size()) == 10);
}
