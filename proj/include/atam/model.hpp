// Core data types of the abstract Tile Assembly Model: glues, tile types,
// assemblies on the integer lattice, and the attachment rule (including
// negative glue strengths, attachment-only semantics).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace atam {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};
struct OccupiedPosition : Error {
    using Error::Error;
};
struct IsolatedPosition : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

struct Vec {
    int x = 0;
    int y = 0;
};

inline bool operator==(Vec a, Vec b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Vec a, Vec b) { return !(a == b); }
inline Vec operator*(int k, Vec v) { return {k * v.x, k * v.y}; }
inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }

// Lattice position. Ordered row-major (y first) so that ordered containers
// iterate in the canonical (y, x) order used throughout.
struct Position {
    int x = 0;
    int y = 0;
};

inline bool operator==(Position a, Position b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Position a, Position b) { return !(a == b); }
inline bool operator<(Position a, Position b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}
inline Position operator+(Position p, Vec v) { return {p.x + v.x, p.y + v.y}; }
inline Vec operator-(Position a, Position b) { return {a.x - b.x, a.y - b.y}; }

using PositionSet = std::set<Position>;

// A glue is a (label, strength) pair. The null glue has an empty label and
// strength 0 and interacts with nothing, not even another null glue.
struct Glue {
    std::string label;
    int strength = 0;

    bool is_null() const { return label.empty(); }
};

inline bool operator==(const Glue& a, const Glue& b) {
    return a.label == b.label && a.strength == b.strength;
}
inline bool operator!=(const Glue& a, const Glue& b) { return !(a == b); }

inline Glue null_glue() { return Glue{}; }

// Two abutting glues interact only on an exact (label, strength) match with a
// nonempty label; the interaction contributes the common strength, which may
// be negative. Symmetric in its arguments.
inline int glue_interaction(const Glue& a, const Glue& b) {
    if (a.label.empty() || b.label.empty()) return 0;
    if (a.label != b.label || a.strength != b.strength) return 0;
    return a.strength;
}

enum class Side { North = 0, East = 1, South = 2, West = 3 };

inline Side opposite(Side s) {
    switch (s) {
        case Side::North: return Side::South;
        case Side::East: return Side::West;
        case Side::South: return Side::North;
        default: return Side::East;
    }
}

inline Vec side_offset(Side s) {
    switch (s) {
        case Side::North: return {0, 1};
        case Side::East: return {1, 0};
        case Side::South: return {0, -1};
        default: return {-1, 0};
    }
}

// An unrotatable unit square with a glue on each side and an optional black
// marking (the weak self-assembly paint).
struct TileType {
    std::string name;
    Glue north, east, south, west;
    bool black = false;

    const Glue& side(Side s) const {
        switch (s) {
            case Side::North: return north;
            case Side::East: return east;
            case Side::South: return south;
            default: return west;
        }
    }
    Glue& side(Side s) {
        switch (s) {
            case Side::North: return north;
            case Side::East: return east;
            case Side::South: return south;
            default: return west;
        }
    }
};

// Finite rectangle of the lattice on which infinite assemblies are evaluated.
struct Window {
    int x_min = 0;
    int x_max = 0;
    int y_min = 0;
    int y_max = 0;

    bool contains(Position p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    int width() const { return x_max - x_min + 1; }
    int height() const { return y_max - y_min + 1; }
    long long area() const { return static_cast<long long>(width()) * height(); }
    bool valid() const { return x_min <= x_max && y_min <= y_max; }
};

inline bool operator==(const Window& a, const Window& b) {
    return a.x_min == b.x_min && a.x_max == b.x_max && a.y_min == b.y_min && a.y_max == b.y_max;
}

// A finite partial placement of tile types on the lattice. Placements map
// positions to tile-type names; provenance records the attachment step of
// every non-seed tile (seed tiles have no provenance entry).
struct Assembly {
    std::map<Position, std::string> placements;
    std::map<Position, int> provenance;

    bool occupied(Position p) const { return placements.count(p) != 0; }
    const std::string* tile_name_at(Position p) const {
        auto it = placements.find(p);
        return it == placements.end() ? nullptr : &it->second;
    }
    std::size_t size() const { return placements.size(); }
    bool empty() const { return placements.empty(); }
};

inline bool operator==(const Assembly& a, const Assembly& b) {
    return a.placements == b.placements;
}

// Tile-type set + seed assembly + temperature.
struct TileAssemblySystem {
    std::vector<TileType> tiles;
    Assembly seed;
    int temperature = 1;

    const TileType* find_tile(const std::string& name) const {
        for (const auto& t : tiles)
            if (t.name == name) return &t;
        return nullptr;
    }
    const TileType& tile(const std::string& name) const {
        const TileType* t = find_tile(name);
        if (!t) throw ValidationError("unknown tile type: " + name);
        return *t;
    }
    const TileType& tile_at(const Assembly& a, Position p) const {
        const std::string* n = a.tile_name_at(p);
        if (!n) throw ValidationError("no tile at position");
        return tile(*n);
    }

    // Throws ValidationError on duplicate names, dangling seed references,
    // empty seed, or temperature < 1.
    void validate() const {
        std::set<std::string> names;
        for (const auto& t : tiles) {
            if (t.name.empty()) throw ValidationError("tile with empty name");
            if (!names.insert(t.name).second)
                throw ValidationError("duplicate tile name: " + t.name);
        }
        if (seed.empty()) throw ValidationError("seed assembly is empty");
        for (const auto& [pos, name] : seed.placements) {
            (void)pos;
            if (!names.count(name))
                throw ValidationError("seed references unknown tile: " + name);
        }
        if (temperature < 1) throw ValidationError("temperature must be >= 1");
    }
};

// Summed matched-glue strength of tile t placed at p against the occupied
// neighbors of p. Missing neighbors contribute 0; matched negative glues
// subtract. Requires p empty with at least one occupied 4-neighbor.
inline int binding_strength(const Assembly& a, const TileAssemblySystem& sys, Position p,
                            const TileType& t) {
    if (a.occupied(p)) throw OccupiedPosition("binding_strength: position occupied");
    int total = 0;
    bool has_neighbor = false;
    for (Side s : {Side::North, Side::East, Side::South, Side::West}) {
        Position q = p + side_offset(s);
        const std::string* n = a.tile_name_at(q);
        if (!n) continue;
        has_neighbor = true;
        total += glue_interaction(t.side(s), sys.tile(*n).side(opposite(s)));
    }
    if (!has_neighbor) throw IsolatedPosition("binding_strength: no occupied neighbor");
    return total;
}

// Attachment rule: a tile may attach iff its net matched strength reaches the
// temperature. Attachment-only semantics; tiles never detach.
inline bool can_attach(const Assembly& a, const TileAssemblySystem& sys, Position p,
                       const TileType& t, int temperature) {
    return binding_strength(a, sys, p, t) >= temperature;
}

}  // namespace atam
