#include <catch_amalgamated.hpp>

#include "atam/catalog.hpp"
#include "atam/engine.hpp"
#include "atam/path_pump.hpp"
#include "oracles.hpp"

using namespace atam;

namespace {

std::size_t edge_count(const BindingGraph& g) {
    std::size_t deg = 0;
    for (const auto& [pos, nbrs] : g) {
        (void)pos;
        deg += nbrs.size();
    }
    return deg / 2;
}

// Order-free recursive count of simple paths, independent of the DFS
// enumeration in the library.
void count_paths_brute(const BindingGraph& g, Position at, std::set<Position>& visited,
                       std::size_t& count) {
    auto it = g.find(at);
    if (it == g.end()) return;
    for (Position q : it->second) {
        if (visited.count(q)) continue;
        ++count;
        visited.insert(q);
        count_paths_brute(g, q, visited, count);
        visited.erase(q);
    }
}

TilePath grown_blocked_pump_path() {
    const CatalogEntry& e = catalog("blocked-pump");
    RunResult r = run(e.system, e.default_window, OrderPolicy::canonical(), 1000);
    PathEnumeration paths = paths_from_seed(r.assembly, e.system, {0, 0}, 100, 100);
    TilePath longest;
    for (const auto& p : paths.paths)
        if (p.steps.size() > longest.steps.size()) longest = p;
    return longest;
}

// Self-avoiding walk of universal tiles with straight runs and turns.
TilePath fuzz_walk(Lcg& rng) {
    std::vector<Position> walk{{0, 0}};
    std::set<Position> seen{{0, 0}};
    int heading = rng.below(4);
    int len = 4 + static_cast<int>(rng.below(20));
    const Vec dirs[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
    while (static_cast<int>(walk.size()) <= len) {
        if (rng.below(10) < 4) heading = rng.below(4);
        bool moved = false;
        for (int attempt = 0; attempt < 4 && !moved; ++attempt) {
            Position next = walk.back() + dirs[(heading + attempt) % 4];
            if (seen.count(next)) continue;
            heading = (heading + attempt) % 4;
            walk.push_back(next);
            seen.insert(next);
            moved = true;
        }
        if (!moved) break;
    }
    return oracles::universal_path(walk);
}

}  // namespace

TEST_CASE("binding_graph: a row of self-gluing tiles is a path graph") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    for (int x = 0; x < 5; ++x) a.placements[{x, 0}] = "U";
    BindingGraph g = binding_graph(a, sys);
    CHECK(g.size() == 5);
    CHECK(edge_count(g) == 4);
}

TEST_CASE("binding_graph: diagonal neighbors share no edge") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    a.placements[{0, 0}] = "U";
    a.placements[{1, 1}] = "U";
    BindingGraph g = binding_graph(a, sys);
    CHECK(edge_count(g) == 0);
}

TEST_CASE("binding_graph: adjacency without interacting glues is no edge") {
    TileAssemblySystem sys;
    sys.temperature = 1;
    sys.tiles = {TileType{"A", {}, {"x", 1}, {}, {}, false},
                 TileType{"B", {}, {}, {}, {"y", 1}, false}};
    sys.seed.placements[{0, 0}] = "A";
    Assembly a;
    a.placements[{0, 0}] = "A";
    a.placements[{1, 0}] = "B";
    CHECK(edge_count(binding_graph(a, sys)) == 0);
}

TEST_CASE("binding_graph: a 2x2 filled block is a 4-cycle") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x) a.placements[{x, y}] = "U";
    BindingGraph g = binding_graph(a, sys);
    CHECK(g.size() == 4);
    CHECK(edge_count(g) == 4);
    for (const auto& [pos, nbrs] : g) {
        (void)pos;
        CHECK(nbrs.size() == 2);
    }
}

TEST_CASE("paths_from_seed: a straight row has one maximal path of 5 steps") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    for (int x = 0; x < 5; ++x) a.placements[{x, 0}] = "U";
    PathEnumeration e = paths_from_seed(a, sys, {0, 0}, 100, 100);
    CHECK(e.paths.size() == 5);  // lengths 0..4
    int maximal = 0;
    for (const auto& p : e.paths)
        if (p.steps.size() == 5) ++maximal;
    CHECK(maximal == 1);
    CHECK_FALSE(e.len_capped);
    CHECK_FALSE(e.count_capped);
}

TEST_CASE("paths_from_seed: a lone seed yields one zero-length path") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    a.placements[{0, 0}] = "U";
    PathEnumeration e = paths_from_seed(a, sys, {0, 0}, 100, 100);
    REQUIRE(e.paths.size() == 1);
    CHECK(e.paths[0].length() == 0);
    CHECK(e.paths[0].steps[0].pos == Position{0, 0});
}

TEST_CASE("paths_from_seed: simple paths of a 2x2 block from a corner") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x) a.placements[{x, y}] = "U";

    std::size_t brute = 0;
    std::set<Position> visited{{0, 0}};
    count_paths_brute(binding_graph(a, sys), {0, 0}, visited, brute);
    CHECK(brute == 6);  // hand enumeration on the 4-cycle: two arms of three prefixes each

    PathEnumeration e = paths_from_seed(a, sys, {0, 0}, 100, 100);
    std::size_t nonzero = 0;
    for (const auto& p : e.paths)
        if (p.length() >= 1) ++nonzero;
    CHECK(nonzero == brute);
    CHECK(e.paths.size() == brute + 1);
}

TEST_CASE("paths_from_seed: caps are reported, not raised") {
    TileAssemblySystem sys = oracles::universal_path_system();
    Assembly a;
    for (int x = 0; x < 8; ++x) a.placements[{x, 0}] = "U";
    PathEnumeration limited = paths_from_seed(a, sys, {0, 0}, 3, 100);
    CHECK(limited.len_capped);
    CHECK(limited.paths.size() == 4);
    PathEnumeration few = paths_from_seed(a, sys, {0, 0}, 100, 2);
    CHECK(few.count_capped);
    CHECK(few.paths.size() == 2);
}

TEST_CASE("find_repeats") {
    SECTION("all-distinct path has none") {
        auto [sys, path] = oracles::make_path_system({{0, 0}, {1, 0}, {2, 0}}, {"t", "a", "b"});
        validate_path(path, sys);
        CHECK(find_repeats(path).empty());
    }
    SECTION("t,a,t repeats at (0,2)") {
        auto [sys, path] = oracles::make_path_system({{0, 0}, {1, 0}, {2, 0}}, {"t", "a", "t"});
        validate_path(path, sys);
        CHECK(find_repeats(path) == std::vector<std::pair<int, int>>{{0, 2}});
    }
    SECTION("pairs come out in lexicographic order") {
        TilePath p = oracles::universal_path({{0, 0}, {1, 0}, {2, 0}});
        CHECK(find_repeats(p) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    }
    SECTION("pigeonhole: more steps than tile types forces a repeat") {
        Lcg rng(11);
        for (int it = 0; it < 25; ++it) {
            TilePath p = fuzz_walk(rng);
            if (p.steps.size() >= 2) CHECK_FALSE(find_repeats(p).empty());
        }
    }
}

TEST_CASE("pump_check: a straight east segment is pumpable") {
    auto [sys, path] = oracles::make_path_system({{0, 0}, {1, 0}, {2, 0}}, {"t", "t", "t"});
    validate_path(path, sys);
    PumpReport r = pump_check(path, 0, 1);
    CHECK(r.pumpable());
    CHECK(r.displacement == Vec{1, 0});
    CHECK(r.checked_bound >= 1);
}

TEST_CASE("pump_check: the grown blocked-pump path is blocked at the first copy") {
    TilePath path = grown_blocked_pump_path();
    REQUIRE(path.steps.size() == 9);
    CHECK(path.steps[2].tile == "X");
    CHECK(path.steps[6].tile == "X");

    auto brute = oracles::pump_brute(path, 2, 6, 50);
    REQUIRE(brute.blocked);
    CHECK(brute.first_bad_copy == 1);
    CHECK(brute.collision_at == Position{-1, 2});

    PumpReport r = pump_check(path, 2, 6);
    REQUIRE_FALSE(r.pumpable());
    CHECK(r.displacement == Vec{-2, 0});
    CHECK(r.first_bad_copy == brute.first_bad_copy);
    CHECK(r.collision_at == brute.collision_at);
}

TEST_CASE("pump_check: hook path self-intersects at the second copy") {
    std::vector<Position> walk;
    for (int x = 0; x <= 8; ++x) walk.push_back({x, 0});
    walk.push_back({8, 1});
    walk.push_back({8, 2});
    for (int x = 7; x >= 2; --x) walk.push_back({x, 2});
    walk.push_back({2, 1});
    std::vector<std::string> names(walk.size());
    for (std::size_t k = 0; k < walk.size(); ++k) names[k] = "n" + std::to_string(k);
    names[17] = names[14];  // repeat at (4,2) and (2,1)
    auto [sys, path] = oracles::make_path_system(walk, names);
    validate_path(path, sys);

    auto brute = oracles::pump_brute(path, 14, 17, 50);
    REQUIRE(brute.blocked);
    CHECK(brute.first_bad_copy == 2);
    CHECK(brute.collision_at == Position{0, 0});

    PumpReport r = pump_check(path, 14, 17);
    REQUIRE_FALSE(r.pumpable());
    CHECK(r.displacement == Vec{-2, -1});
    CHECK(r.first_bad_copy == 2);
    CHECK(r.collision_at == Position{0, 0});
}

TEST_CASE("pump_check rejects invalid segments") {
    auto [sys, path] = oracles::make_path_system({{0, 0}, {1, 0}, {2, 0}}, {"t", "a", "t"});
    (void)sys;
    CHECK_THROWS_AS(pump_check(path, 0, 1), InvalidSegment);   // different tile types
    CHECK_THROWS_AS(pump_check(path, 2, 2, 0), InvalidSegment);
    CHECK_THROWS_AS(pump_check(path, 0, 5), InvalidSegment);
}

TEST_CASE("pump_expand sizes") {
    SECTION("k = 0 is exactly the path prefix") {
        TilePath p = oracles::universal_path({{0, 0}, {0, 1}, {1, 1}});
        PositionSet e = pump_expand(p, 0, 2, 0);
        CHECK(e == PositionSet{{0, 0}, {0, 1}});
    }
    SECTION("a straight path expands without loss") {
        TilePath p = oracles::universal_path({{0, 0}, {1, 0}, {2, 0}});
        CHECK(pump_expand(p, 0, 2, 3).size() == 2u + 3u * 2u);
    }
    SECTION("the blocked catalog path loses cells at the first copy") {
        TilePath path = grown_blocked_pump_path();
        CHECK(pump_expand(path, 2, 6, 1).size() < 6u + 4u);
    }
}

TEST_CASE("certificate soundness: pumpable segments expand cleanly to 3K") {
    Lcg rng(2024);
    int pumpable_seen = 0;
    for (int it = 0; it < 60; ++it) {
        TilePath p = fuzz_walk(rng);
        if (p.steps.size() < 2) continue;
        auto repeats = find_repeats(p);
        for (std::size_t ri = 0; ri < repeats.size(); ri += 1 + rng.below(3)) {
            auto [i, j] = repeats[ri];
            PumpReport r = pump_check(p, i, j);
            if (!r.pumpable()) continue;
            ++pumpable_seen;
            int k = 3 * r.checked_bound;
            CHECK(pump_expand(p, i, j, k).size() ==
                  static_cast<std::size_t>(j) + static_cast<std::size_t>(k) * (j - i));
        }
    }
    CHECK(pumpable_seen > 20);
}

TEST_CASE("refutation soundness: the reported cell is a genuine collision") {
    Lcg rng(77);
    int blocked_seen = 0;
    for (int it = 0; it < 60; ++it) {
        TilePath p = fuzz_walk(rng);
        if (p.steps.size() < 2) continue;
        auto repeats = find_repeats(p);
        for (std::size_t ri = 0; ri < repeats.size(); ri += 1 + rng.below(3)) {
            auto [i, j] = repeats[ri];
            PumpReport r = pump_check(p, i, j);
            if (r.pumpable()) continue;
            ++blocked_seen;
            int k = r.first_bad_copy;
            Vec d = r.displacement;
            CHECK(pump_expand(p, i, j, k - 1).count(r.collision_at) == 1);
            bool in_copy = false;
            for (int s = i; s < j; ++s)
                if (p.steps[s].pos + k * d == r.collision_at) in_copy = true;
            CHECK(in_copy);
        }
    }
    CHECK(blocked_seen > 20);
}

TEST_CASE("pump_check agrees with naive expansion on fuzzed paths") {
    Lcg rng(31337);
    int segments = 0;
    for (int it = 0; it < 40; ++it) {
        TilePath p = fuzz_walk(rng);
        if (p.steps.size() < 2) continue;
        auto repeats = find_repeats(p);
        for (std::size_t ri = 0; ri < repeats.size(); ri += 1 + rng.below(4)) {
            auto [i, j] = repeats[ri];
            ++segments;
            PumpReport r = pump_check(p, i, j);
            auto brute = oracles::pump_brute(p, i, j, 50);
            if (r.pumpable()) {
                CHECK_FALSE(brute.blocked);
            } else {
                REQUIRE(brute.blocked);
                CHECK(brute.first_bad_copy == r.first_bad_copy);
                CHECK(brute.collision_at == r.collision_at);
            }
        }
    }
    CHECK(segments > 100);
}

TEST_CASE("pump verdicts are translation invariant") {
    TilePath base = grown_blocked_pump_path();
    Lcg rng(5);
    for (int it = 0; it < 10; ++it) {
        Vec t{static_cast<int>(rng.below(41)) - 20, static_cast<int>(rng.below(41)) - 20};
        TilePath moved = base;
        for (auto& s : moved.steps) s.pos = s.pos + t;
        for (auto [i, j] : find_repeats(base)) {
            PumpReport r0 = pump_check(base, i, j);
            PumpReport r1 = pump_check(moved, i, j);
            CHECK(r0.pumpable() == r1.pumpable());
            if (r0.pumpable()) {
                CHECK(r0.checked_bound == r1.checked_bound);
            } else {
                CHECK(r0.first_bad_copy == r1.first_bad_copy);
                CHECK(r1.collision_at == r0.collision_at + t);
            }
        }
    }
}

TEST_CASE("copy junctions reuse the original junction glue pair") {
    auto [sys, path] = oracles::make_path_system(
        {{0, 0}, {0, 1}, {1, 1}, {1, 2}}, {"a", "x", "b", "x"});
    validate_path(path, sys);
    PumpReport r = pump_check(path, 1, 3);
    REQUIRE(r.pumpable());
    // The junction edge (j-1, j) carries tile types (b, x); every copy's
    // junction repeats the same pair, so the same glues interact.
    Vec step = path.steps[3].pos - path.steps[2].pos;
    Side s = step.y == 1 ? Side::North : step.y == -1 ? Side::South
             : step.x == 1 ? Side::East : Side::West;
    int strength = glue_interaction(sys.tile("b").side(s), sys.tile("x").side(opposite(s)));
    CHECK(strength >= 1);
    for (int k = 1; k <= r.checked_bound; ++k) {
        // same types at the translated junction, by construction of the copies
        CHECK(path.steps[2].tile == "b");
        CHECK(path.steps[3].tile == "x");
    }
}

TEST_CASE("pump_assembly_overlaps flags advisory collisions only") {
    const CatalogEntry& e = catalog("filler");
    RunResult r = run(e.system, {0, 3, 0, 3}, OrderPolicy::canonical(), 1000);
    TilePath p = oracles::universal_path({{0, 0}, {1, 0}});
    p.steps[0].tile = "F";
    p.steps[1].tile = "F";
    PumpReport rep = pump_check(p, 0, 1);
    CHECK(rep.pumpable());  // the path alone never self-collides
    auto overlaps = pump_assembly_overlaps(p, 0, 1, 4, r.assembly);
    CHECK(overlaps.size() == 2);  // copies at (2,0) and (3,0) overlap the filler
}
