// Bundled example systems. Each entry records the system, a default window,
// and the properties the rest of the workbench is expected to reproduce.
#pragma once

#include <string>
#include <vector>

#include "atam/model.hpp"

namespace atam {

struct UnknownExample : Error {
    using Error::Error;
};

struct CatalogEntry {
    std::string id;
    std::string description;
    TileAssemblySystem system;
    Window default_window;
    bool expected_directed = true;
    // Oracle id for the black set on first-quadrant windows:
    // "" (none), "all", "even-columns", "pascal-mod2".
    std::string black_oracle;
};

namespace detail {

inline TileType make_tile(std::string name, Glue n, Glue e, Glue s, Glue w, bool black = false) {
    TileType t;
    t.name = std::move(name);
    t.north = std::move(n);
    t.east = std::move(e);
    t.south = std::move(s);
    t.west = std::move(w);
    t.black = black;
    return t;
}

inline CatalogEntry make_filler() {
    CatalogEntry e;
    e.id = "filler";
    e.description = "single self-gluing black tile; fills the window from the seed (t=1)";
    Glue g{"g", 1};
    e.system.tiles = {make_tile("F", g, g, g, g, true)};
    e.system.seed.placements[{0, 0}] = "F";
    e.system.temperature = 1;
    e.default_window = {0, 15, 0, 15};
    e.expected_directed = true;
    e.black_oracle = "all";
    return e;
}

inline CatalogEntry make_stripes() {
    CatalogEntry e;
    e.id = "stripes";
    e.description = "alternating black/plain columns; black set is the even columns (t=1)";
    Glue ev{"e", 1}, od{"o", 1}, eo{"eo", 1}, oe{"oe", 1};
    e.system.tiles = {
        make_tile("E", ev, eo, ev, oe, true),
        make_tile("O", od, oe, od, eo, false),
    };
    e.system.seed.placements[{0, 0}] = "E";
    e.system.temperature = 1;
    e.default_window = {0, 15, 0, 15};
    e.expected_directed = true;
    e.black_oracle = "even-columns";
    return e;
}

inline CatalogEntry make_race() {
    CatalogEntry e;
    e.id = "race";
    e.description = "two tile types compete for the same position via the same glue (t=1)";
    Glue r{"r", 1};
    e.system.tiles = {
        make_tile("S", null_glue(), r, null_glue(), null_glue(), false),
        make_tile("A", null_glue(), null_glue(), null_glue(), r, true),
        make_tile("B", null_glue(), null_glue(), null_glue(), r, false),
    };
    e.system.seed.placements[{0, 0}] = "S";
    e.system.temperature = 1;
    e.default_window = {0, 3, 0, 3};
    e.expected_directed = false;
    return e;
}

// XOR rule on an L-shaped boundary: the value at (x, y) is the parity of the
// binomial coefficient C(x+y, x), i.e. row x+y of Pascal's triangle mod 2
// along the anti-diagonals. Interior attachment needs both the west and the
// south input (cooperation at temperature 2).
inline CatalogEntry make_sierpinski2() {
    CatalogEntry e;
    e.id = "sierpinski2";
    e.description = "XOR-rule Sierpinski pattern on the first quadrant (t=2)";
    Glue bot{"bot", 2}, left{"left", 2};
    Glue h0{"h0", 1}, h1{"h1", 1}, v0{"v0", 1}, v1{"v1", 1};
    auto hg = [&](int b) { return b ? h1 : h0; };
    auto vg = [&](int b) { return b ? v1 : v0; };
    e.system.tiles = {
        make_tile("S", left, bot, null_glue(), null_glue(), true),
        make_tile("B", v1, bot, null_glue(), bot, true),
        make_tile("L", left, h1, left, null_glue(), true),
    };
    for (int w = 0; w <= 1; ++w)
        for (int s = 0; s <= 1; ++s) {
            int v = w ^ s;
            e.system.tiles.push_back(make_tile("T" + std::to_string(w) + std::to_string(s),
                                               vg(v), hg(v), vg(s), hg(w), v == 1));
        }
    e.system.seed.placements[{0, 0}] = "S";
    e.system.temperature = 2;
    e.default_window = {0, 15, 0, 15};
    e.expected_directed = true;
    e.black_oracle = "pascal-mod2";
    return e;
}

// Grows a hook-shaped path whose repeated tile type X (at (1,1) and (-1,1))
// has displacement (-2, 0); the first pumped copy of the X..X segment lands
// on the earlier path cell (-1, 2).
inline CatalogEntry make_blocked_pump() {
    CatalogEntry e;
    e.id = "blocked-pump";
    e.description = "path whose repeated segment collides with the earlier path when pumped (t=1)";
    Glue a{"a", 1}, b{"b", 1}, c{"c", 1}, d{"d", 1}, f{"f", 1};
    e.system.tiles = {
        make_tile("p0", null_glue(), a, null_glue(), null_glue(), false),
        make_tile("p1", b, null_glue(), null_glue(), a, false),
        make_tile("X", c, null_glue(), b, null_glue(), false),
        make_tile("p3", null_glue(), null_glue(), c, d, false),
        make_tile("p4", null_glue(), d, null_glue(), f, false),
        make_tile("p5", null_glue(), f, c, null_glue(), false),
    };
    e.system.seed.placements[{0, 0}] = "p0";
    e.system.temperature = 1;
    e.default_window = {-4, 3, -2, 4};
    e.expected_directed = true;
    return e;
}

// A strength-2 bond alone would admit V at (1, 1), but the matched -1 glue
// against the west neighbor drops the net strength below temperature.
inline CatalogEntry make_negative_glue_demo() {
    CatalogEntry e;
    e.id = "negative-glue-demo";
    e.description = "matched -1 glue vetoes an otherwise stable attachment (t=2)";
    Glue s{"s", 2}, veto{"veto", -1};
    e.system.tiles = {
        make_tile("A", null_glue(), null_glue(), null_glue(), null_glue(), false),
        make_tile("B", s, null_glue(), null_glue(), null_glue(), false),
        make_tile("C", null_glue(), veto, null_glue(), null_glue(), false),
        make_tile("V", null_glue(), null_glue(), s, veto, true),
    };
    e.system.seed.placements[{0, 0}] = "A";
    e.system.seed.placements[{1, 0}] = "B";
    e.system.seed.placements[{0, 1}] = "C";
    e.system.temperature = 2;
    e.default_window = {0, 2, 0, 2};
    e.expected_directed = true;
    return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        detail::make_filler(),        detail::make_stripes(),
        detail::make_race(),          detail::make_sierpinski2(),
        detail::make_blocked_pump(),  detail::make_negative_glue_demo(),
    };
    return entries;
}

inline const CatalogEntry& catalog(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw UnknownExample("unknown catalog example: " + id);
}

// Copy of the system with one glue replaced by the null glue; used to build
// programmatic variants such as the negative-glue demo without its veto.
inline TileAssemblySystem strip_glue(const TileAssemblySystem& sys, const std::string& tile_name,
                                     Side side) {
    TileAssemblySystem out = sys;
    for (auto& t : out.tiles)
        if (t.name == tile_name) t.side(side) = null_glue();
    return out;
}

}  // namespace atam
