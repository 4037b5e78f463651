// Seeded growth within a finite window: frontier computation, sequential
// single-attachment runs under canonical or seeded-random order, black-set
// extraction, and directedness probing by order randomization.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "atam/model.hpp"

namespace atam {

// Linear congruential generator, the single source of randomness in the
// workbench. Constants 1664525 / 1013904223 (mod 2^32); selection via
// fixed-point multiply on the high bits. Replays bit-identically everywhere.
struct Lcg {
    std::uint32_t state = 1;

    explicit Lcg(std::uint32_t seed = 1) : state(seed) {}

    std::uint32_t next() {
        state = 1664525u * state + 1013904223u;
        return state;
    }
    // Uniform-ish pick in [0, n).
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(next()) * n) >> 32);
    }
};

struct OrderPolicy {
    enum class Kind { Canonical, Random };
    Kind kind = Kind::Canonical;
    std::uint32_t rng_seed = 1;

    static OrderPolicy canonical() { return {Kind::Canonical, 0}; }
    static OrderPolicy random(std::uint32_t seed) { return {Kind::Random, seed}; }
};

struct FrontierEntry {
    Position pos;
    std::string tile;
};

inline bool operator==(const FrontierEntry& a, const FrontierEntry& b) {
    return a.pos == b.pos && a.tile == b.tile;
}
// Canonical attachment order: (y, x, tile-name) ascending.
inline bool operator<(const FrontierEntry& a, const FrontierEntry& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.tile < b.tile;
}

// All (position, tile) pairs attachable to `a` inside the window, in
// canonical order. Positions with no occupied neighbor are simply absent.
inline std::vector<FrontierEntry> frontier(const Assembly& a, const TileAssemblySystem& sys,
                                           const Window& w) {
    std::set<FrontierEntry> out;
    for (const auto& [pos, name] : a.placements) {
        (void)name;
        for (Side s : {Side::North, Side::East, Side::South, Side::West}) {
            Position q = pos + side_offset(s);
            if (!w.contains(q) || a.occupied(q)) continue;
            for (const auto& t : sys.tiles) {
                if (can_attach(a, sys, q, t, sys.temperature))
                    out.insert({q, t.name});
            }
        }
    }
    return {out.begin(), out.end()};
}

enum class RunStatus { Completed, StepLimitReached };

struct RunResult {
    Assembly assembly;
    RunStatus status = RunStatus::Completed;
    int steps = 0;
    Window window;
};

namespace detail {

struct PositionHash {
    std::size_t operator()(Position p) const {
        return std::hash<long long>()((static_cast<long long>(p.y) << 32) ^
                                      static_cast<std::uint32_t>(p.x));
    }
};

}  // namespace detail

// Grows the seed one stable attachment per step until the frontier empties or
// max_steps is reached. Deterministic given (sys, w, order). The frontier is
// maintained incrementally: attaching at p only changes attachability at p and
// its four neighbors (negative glues can revoke entries, so neighbors are
// fully recomputed).
inline RunResult run(const TileAssemblySystem& sys, const Window& w, const OrderPolicy& order,
                     int max_steps) {
    sys.validate();
    for (const auto& [pos, name] : sys.seed.placements) {
        (void)name;
        if (!w.contains(pos)) throw ValidationError("seed position outside window");
    }

    Assembly a;
    a.placements = sys.seed.placements;

    std::set<FrontierEntry> front;
    std::unordered_set<Position, detail::PositionHash> dirty;

    auto recompute_at = [&](Position q) {
        for (auto it = front.lower_bound({q, ""}); it != front.end() && it->pos == q;)
            it = front.erase(it);
        if (!w.contains(q) || a.occupied(q)) return;
        bool has_neighbor = false;
        for (Side s : {Side::North, Side::East, Side::South, Side::West})
            if (a.occupied(q + side_offset(s))) has_neighbor = true;
        if (!has_neighbor) return;
        for (const auto& t : sys.tiles)
            if (can_attach(a, sys, q, t, sys.temperature)) front.insert({q, t.name});
    };

    for (const auto& [pos, name] : a.placements) {
        (void)name;
        for (Side s : {Side::North, Side::East, Side::South, Side::West}) {
            Position q = pos + side_offset(s);
            if (dirty.insert(q).second) recompute_at(q);
        }
    }

    Lcg rng(order.rng_seed);
    int steps = 0;
    while (!front.empty()) {
        if (steps >= max_steps) return {std::move(a), RunStatus::StepLimitReached, steps, w};
        auto it = front.begin();
        if (order.kind == OrderPolicy::Kind::Random)
            std::advance(it, rng.below(static_cast<std::uint32_t>(front.size())));
        FrontierEntry chosen = *it;
        ++steps;
        a.placements[chosen.pos] = chosen.tile;
        a.provenance[chosen.pos] = steps;
        recompute_at(chosen.pos);
        for (Side s : {Side::North, Side::East, Side::South, Side::West})
            recompute_at(chosen.pos + side_offset(s));
    }
    return {std::move(a), RunStatus::Completed, steps, w};
}

// Positions of black tile types in the assembly.
inline PositionSet black_set(const Assembly& a, const TileAssemblySystem& sys) {
    PositionSet out;
    for (const auto& [pos, name] : a.placements)
        if (sys.tile(name).black) out.insert(pos);
    return out;
}

// Re-validates provenance: detaches everything non-seed, re-attaches in the
// recorded step order and checks can_attach before each step.
inline bool replay_provenance(const Assembly& a, const TileAssemblySystem& sys) {
    std::vector<std::pair<int, Position>> order;
    order.reserve(a.provenance.size());
    for (const auto& [pos, step] : a.provenance) order.push_back({step, pos});
    std::sort(order.begin(), order.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    Assembly replay;
    replay.placements = a.placements;
    for (const auto& [step, pos] : order) {
        (void)step;
        replay.placements.erase(pos);
    }
    for (const auto& [step, pos] : order) {
        (void)step;
        const std::string* name = a.tile_name_at(pos);
        if (!name) return false;
        if (!can_attach(replay, sys, pos, sys.tile(*name), sys.temperature)) return false;
        replay.placements[pos] = *name;
    }
    return replay.placements == a.placements;
}

struct DirectednessWitness {
    Assembly first;
    Assembly second;
    Position first_diff;
    int trial_first = 0;
    int trial_second = 0;
};

struct DirectednessReport {
    int trials = 0;
    bool consistent = true;
    std::optional<DirectednessWitness> witness;
};

// First position (canonical order) at which two placement maps disagree.
inline std::optional<Position> first_difference(const Assembly& a, const Assembly& b) {
    auto ia = a.placements.begin();
    auto ib = b.placements.begin();
    while (ia != a.placements.end() && ib != b.placements.end()) {
        if (ia->first != ib->first) return std::min(ia->first, ib->first);
        if (ia->second != ib->second) return ia->first;
        ++ia;
        ++ib;
    }
    if (ia != a.placements.end()) return ia->first;
    if (ib != b.placements.end()) return ib->first;
    return std::nullopt;
}

// Runs `trials` seeded-random-order growths and compares placement maps.
// Evidence only: "consistent" means consistent within this window and these
// trials, not a directedness proof. Per-trial seeds are drawn from one master
// LCG stream so the whole probe replays from rng_seed.
inline DirectednessReport probe_directedness(const TileAssemblySystem& sys, const Window& w,
                                             int trials, std::uint32_t rng_seed) {
    if (trials < 2) throw std::invalid_argument("probe_directedness: trials must be >= 2");
    int max_steps = static_cast<int>(std::min<long long>(w.area() + 1, 1 << 28));
    Lcg master(rng_seed);

    DirectednessReport report;
    report.trials = trials;
    Assembly baseline = run(sys, w, OrderPolicy::random(master.next()), max_steps).assembly;
    for (int i = 1; i < trials; ++i) {
        Assembly trial = run(sys, w, OrderPolicy::random(master.next()), max_steps).assembly;
        if (auto diff = first_difference(baseline, trial)) {
            report.consistent = false;
            report.witness = DirectednessWitness{baseline, trial, *diff, 0, i};
            return report;
        }
    }
    return report;
}

}  // namespace atam
