// Simple paths in the binding graph and the exact per-path pumpability
// decision: translate a repeated-tile segment by its displacement and either
// certify that no copy ever collides with the earlier portion of the path, or
// report the first colliding copy and cell.
//
// Exactness of the certificate: copies march monotonically along the axis of
// d's largest-magnitude component, so once the segment's bounding box has
// cleared the prefix's bounding box on that axis (bound K), no later copy can
// reach the prefix. An inter-copy collision at distance m implies the segment
// meets its own m-th translate, which already puts copy m inside the prefix;
// hence the first collision, if any, is always against the prefix and occurs
// at some copy k < K. Checking copies 1..K is therefore a complete decision.
#pragma once

#include <algorithm>
#include <vector>

#include "atam/engine.hpp"
#include "atam/model.hpp"

namespace atam {

struct InvalidSegment : Error {
    using Error::Error;
};

struct PathStep {
    Position pos;
    std::string tile;
};

inline bool operator==(const PathStep& a, const PathStep& b) {
    return a.pos == b.pos && a.tile == b.tile;
}

// A simple path in the binding graph: pairwise distinct positions, each
// consecutive pair 4-adjacent with facing glues interacting with strength
// >= 1 (binds along the path at temperature 1).
struct TilePath {
    std::vector<PathStep> steps;

    int length() const { return static_cast<int>(steps.size()) - 1; }
};

inline void validate_path(const TilePath& p, const TileAssemblySystem& sys) {
    if (p.steps.empty()) throw ValidationError("path has no steps");
    std::set<Position> seen;
    for (const auto& s : p.steps)
        if (!seen.insert(s.pos).second) throw ValidationError("path revisits a position");
    for (std::size_t k = 0; k + 1 < p.steps.size(); ++k) {
        Vec d = p.steps[k + 1].pos - p.steps[k].pos;
        if (std::abs(d.x) + std::abs(d.y) != 1)
            throw ValidationError("consecutive path steps not 4-adjacent");
        const TileType& a = sys.tile(p.steps[k].tile);
        const TileType& b = sys.tile(p.steps[k + 1].tile);
        Side s = d.x == 1 ? Side::East : d.x == -1 ? Side::West : d.y == 1 ? Side::North : Side::South;
        if (glue_interaction(a.side(s), b.side(opposite(s))) < 1)
            throw ValidationError("consecutive path steps do not bind");
    }
}

// Undirected adjacency over occupied positions; edges where the facing glues
// interact with strength >= 1. Neighbor lists are in N, E, S, W order.
using BindingGraph = std::map<Position, std::vector<Position>>;

inline BindingGraph binding_graph(const Assembly& a, const TileAssemblySystem& sys) {
    BindingGraph g;
    for (const auto& [pos, name] : a.placements) {
        auto& nbrs = g[pos];
        for (Side s : {Side::North, Side::East, Side::South, Side::West}) {
            Position q = pos + side_offset(s);
            const std::string* qn = a.tile_name_at(q);
            if (!qn) continue;
            if (glue_interaction(sys.tile(name).side(s), sys.tile(*qn).side(opposite(s))) >= 1)
                nbrs.push_back(q);
        }
    }
    return g;
}

struct PathEnumeration {
    std::vector<TilePath> paths;
    bool len_capped = false;
    bool count_capped = false;
};

namespace detail {

inline void enumerate_paths(const BindingGraph& g, const Assembly& a, TilePath& cur,
                            std::set<Position>& visited, int max_len, int max_paths,
                            PathEnumeration& out) {
    if (static_cast<int>(out.paths.size()) >= max_paths) {
        out.count_capped = true;
        return;
    }
    out.paths.push_back(cur);
    if (cur.length() >= max_len) {
        auto it = g.find(cur.steps.back().pos);
        if (it != g.end())
            for (Position q : it->second)
                if (!visited.count(q)) out.len_capped = true;
        return;
    }
    auto it = g.find(cur.steps.back().pos);
    if (it == g.end()) return;
    for (Position q : it->second) {
        if (visited.count(q)) continue;
        visited.insert(q);
        cur.steps.push_back({q, *a.tile_name_at(q)});
        enumerate_paths(g, a, cur, visited, max_len, max_paths, out);
        cur.steps.pop_back();
        visited.erase(q);
    }
}

}  // namespace detail

// Depth-first enumeration of every simple path from `start` (including the
// zero-length path), neighbors visited N, E, S, W. Caps are reported in the
// result rather than raised.
inline PathEnumeration paths_from_seed(const Assembly& a, const TileAssemblySystem& sys,
                                       Position start, int max_len, int max_paths) {
    if (!a.occupied(start)) throw ValidationError("paths_from_seed: start not occupied");
    BindingGraph g = binding_graph(a, sys);
    PathEnumeration out;
    TilePath cur;
    cur.steps.push_back({start, *a.tile_name_at(start)});
    std::set<Position> visited{start};
    detail::enumerate_paths(g, a, cur, visited, max_len, max_paths, out);
    return out;
}

// All index pairs (i, j), i < j, whose steps carry the same tile type, in
// lexicographic order. Any simple path with more steps than there are tile
// types has at least one such pair.
inline std::vector<std::pair<int, int>> find_repeats(const TilePath& p) {
    std::vector<std::pair<int, int>> out;
    int n = static_cast<int>(p.steps.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.steps[i].tile == p.steps[j].tile) out.push_back({i, j});
    return out;
}

struct PumpReport {
    enum class Verdict { Pumpable, Blocked };
    int i = 0;
    int j = 0;
    Vec displacement;
    Verdict verdict = Verdict::Pumpable;
    int checked_bound = 0;    // Pumpable: copies 1..checked_bound verified collision-free
    int first_bad_copy = 0;   // Blocked: smallest colliding copy index
    Position collision_at{};  // Blocked: first colliding cell, in segment order

    bool pumpable() const { return verdict == Verdict::Pumpable; }
};

namespace detail {

inline void check_segment(const TilePath& p, int i, int j) {
    if (i < 0 || j <= i || j >= static_cast<int>(p.steps.size()))
        throw InvalidSegment("pump segment indices out of range");
    if (p.steps[i].tile != p.steps[j].tile)
        throw InvalidSegment("pump segment endpoints carry different tile types");
    if (p.steps[j].pos - p.steps[i].pos == Vec{0, 0})
        throw InvalidSegment("pump segment displacement is zero");
}

}  // namespace detail

// Exact pumpability decision for the segment [i, j) of a finite path. The
// segment S is translated by d = pos(j) - pos(i); copy k occupies S + k*d.
// Blocked{k, q} if some copy-k cell q lies in the path prefix P (steps
// 0..j-1) or in an earlier copy; otherwise Pumpable with the sufficiency
// bound K described at the top of this header.
inline PumpReport pump_check(const TilePath& p, int i, int j) {
    detail::check_segment(p, i, j);

    Vec d = p.steps[j].pos - p.steps[i].pos;
    std::vector<Position> segment;
    for (int k = i; k < j; ++k) segment.push_back(p.steps[k].pos);
    PositionSet occupied;
    for (int k = 0; k < j; ++k) occupied.insert(p.steps[k].pos);

    PumpReport report;
    report.i = i;
    report.j = j;
    report.displacement = d;

    // Axis of d's largest-magnitude component, ties toward x.
    bool along_x = std::abs(d.x) >= std::abs(d.y);
    auto coord = [&](Position q) { return along_x ? q.x : q.y; };
    int da = along_x ? d.x : d.y;

    int seg_lo = coord(segment[0]), seg_hi = coord(segment[0]);
    for (Position q : segment) {
        seg_lo = std::min(seg_lo, coord(q));
        seg_hi = std::max(seg_hi, coord(q));
    }
    int pre_lo = coord(p.steps[0].pos), pre_hi = pre_lo;
    for (const auto& occ : occupied) {
        pre_lo = std::min(pre_lo, coord(occ));
        pre_hi = std::max(pre_hi, coord(occ));
    }
    // Smallest k with the k-th translate of the segment box strictly beyond
    // the prefix box along the axis.
    int bound;
    if (da > 0)
        bound = (pre_hi - seg_lo) / da + 1;
    else
        bound = (seg_hi - pre_lo) / (-da) + 1;
    bound = std::max(bound, 1);

    for (int k = 1; k <= bound; ++k) {
        for (Position s : segment) {
            Position c = s + k * d;
            if (occupied.count(c)) {
                report.verdict = PumpReport::Verdict::Blocked;
                report.first_bad_copy = k;
                report.collision_at = c;
                return report;
            }
        }
        for (Position s : segment) occupied.insert(s + k * d);
    }
    report.verdict = PumpReport::Verdict::Pumpable;
    report.checked_bound = bound;
    return report;
}

// Literal point set P union copies 1..k. Collisions manifest as a size
// shortfall against |P| + k*|S|.
inline PositionSet pump_expand(const TilePath& p, int i, int j, int k) {
    detail::check_segment(p, i, j);
    if (k < 0) throw InvalidSegment("pump_expand: negative copy count");
    Vec d = p.steps[j].pos - p.steps[i].pos;
    PositionSet out;
    for (int s = 0; s < j; ++s) out.insert(p.steps[s].pos);
    for (int c = 1; c <= k; ++c)
        for (int s = i; s < j; ++s) out.insert(p.steps[s].pos + c * d);
    return out;
}

// Advisory only: cells of copies 1..k that land on assembly tiles outside the
// path prefix. Such overlaps do not affect the per-path verdict.
inline std::vector<Position> pump_assembly_overlaps(const TilePath& p, int i, int j, int k,
                                                    const Assembly& a) {
    detail::check_segment(p, i, j);
    Vec d = p.steps[j].pos - p.steps[i].pos;
    PositionSet prefix;
    for (int s = 0; s < j; ++s) prefix.insert(p.steps[s].pos);
    std::vector<Position> out;
    for (int c = 1; c <= k; ++c)
        for (int s = i; s < j; ++s) {
            Position q = p.steps[s].pos + c * d;
            if (a.occupied(q) && !prefix.count(q)) out.push_back(q);
        }
    return out;
}

}  // namespace atam
