#include "polyfault/json_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace polyfault {

using nlohmann::json;
using nlohmann::ordered_json;

std::string tiling_to_json(const Tiling& t) {
    ordered_json doc;
    doc["rows"] = t.rect.rows;
    doc["cols"] = t.rect.cols;
    doc["pieces"] = ordered_json::array();
    for (const TrominoPlacement& p : t.pieces) {
        ordered_json piece;
        piece["r"] = p.anchor.row;
        piece["c"] = p.anchor.col;
        piece["missing"] = corner_name(p.missing);
        doc["pieces"].push_back(std::move(piece));
    }
    return doc.dump();
}

Tiling tiling_from_json(const std::string& text, bool check) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad tiling document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("pieces"))
        throw std::invalid_argument("tiling document needs rows, cols and pieces");

    Tiling t;
    try {
        t.rect.rows = doc.at("rows").get<int>();
        t.rect.cols = doc.at("cols").get<int>();
        for (const auto& piece : doc.at("pieces")) {
            auto corner = corner_from_name(piece.at("missing").get<std::string>());
            if (!corner) throw std::invalid_argument("unknown missing corner");
            t.pieces.push_back({Cell{piece.at("r").get<int>(), piece.at("c").get<int>()}, *corner});
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad tiling document: ") + e.what());
    }
    canonicalize(t);
    if (check) {
        if (t.rect.rows < 1 || t.rect.cols < 1)
            throw std::invalid_argument("rectangle sides must be positive");
        if (auto v = validate(t)) throw std::invalid_argument("invalid tiling: " + v->describe());
    }
    return t;
}

static const char* dir_name(Direction d) {
    switch (d) {
        case Direction::up: return "up";
        case Direction::down: return "down";
        case Direction::left: return "left";
        case Direction::right: return "right";
    }
    return "??";
}

std::string monodic_to_json(const MonodicTiling& mt) {
    ordered_json doc;
    doc["kind"] = "monodic";
    doc["rows"] = mt.rect.rows;
    doc["cols"] = mt.rect.cols;
    doc["dominoes"] = ordered_json::array();
    for (const DirectedDomino& d : mt.dominoes) {
        ordered_json e;
        e["r1"] = d.tail.row;
        e["c1"] = d.tail.col;
        e["r2"] = d.head.row;
        e["c2"] = d.head.col;
        if (d.dir) e["dir"] = dir_name(*d.dir);
        e["colour"] = "red";
        doc["dominoes"].push_back(std::move(e));
    }
    doc["monominoes"] = ordered_json::array();
    for (const Cell& c : mt.monominoes) {
        ordered_json e;
        e["r"] = c.row;
        e["c"] = c.col;
        e["colour"] = "blue";
        doc["monominoes"].push_back(std::move(e));
    }
    return doc.dump();
}

std::string coloured_to_json(const ColouredDominoTiling& cd) {
    ordered_json doc;
    doc["kind"] = "coloured_domino";
    doc["rows"] = cd.rect.rows;
    doc["cols"] = cd.rect.cols;
    doc["dominoes"] = ordered_json::array();
    for (const ColouredDomino& d : cd.dominoes) {
        ordered_json e;
        e["r1"] = d.a.row;
        e["c1"] = d.a.col;
        e["r2"] = d.b.row;
        e["c2"] = d.b.col;
        e["colour"] = d.colour == PieceColour::red ? "red" : "blue";
        doc["dominoes"].push_back(std::move(e));
    }
    return doc.dump();
}

}  // namespace polyfault
