// Semi-doubly periodic set algebra and the decomposition checker: a set
// {b + n*u + m*v | n, m in N} (N includes 0) has exact membership through the
// 2x2 integer solve when u, v are independent, and through a one-dimensional
// nonnegative-combination solve in the degenerate cases. decompose() searches
// for a finite union of such sets matching a black set on an interior window.
#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "atam/engine.hpp"
#include "atam/model.hpp"

namespace atam {

struct NotTemperatureOne : Error {
    using Error::Error;
};

struct SdpSet {
    Position base;
    Vec period_u;
    Vec period_v;
};

inline bool operator==(const SdpSet& a, const SdpSet& b) {
    return a.base == b.base && a.period_u == b.period_u && a.period_v == b.period_v;
}

struct SdpUnion {
    std::vector<SdpSet> components;
};

namespace detail {

inline long long div_floor(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
inline long long div_ceil(long long a, long long b) { return -div_floor(-a, b); }

// Does n*a + m*b == t admit a solution with n, m >= 0 integers?
inline bool nonneg_combination(long long a, long long b, long long t) {
    if (a == 0 && b == 0) return t == 0;
    if (a == 0) return t % b == 0 && t / b >= 0;
    if (b == 0) return t % a == 0 && t / a >= 0;
    if (a < 0 && b < 0) return nonneg_combination(-a, -b, -t);
    if (a > 0 && b > 0) {
        if (t < 0) return false;
        if (a < b) std::swap(a, b);
        for (long long n = 0; n * a <= t; ++n)
            if ((t - n * a) % b == 0) return true;
        return false;
    }
    // Opposite signs reach every multiple of the gcd.
    return t % std::gcd(std::abs(a), std::abs(b)) == 0;
}

// n >= 0 with n*(wx,wy) == (dx,dy); (wx,wy) != (0,0).
inline bool ray_member(long long wx, long long wy, long long dx, long long dy) {
    long long n;
    if (wx != 0) {
        if (dx % wx != 0) return false;
        n = dx / wx;
    } else {
        if (dy % wy != 0) return false;
        n = dy / wy;
    }
    return n >= 0 && n * wx == dx && n * wy == dy;
}

}  // namespace detail

// Exact membership test: p == base + n*u + m*v for some n, m in N.
inline bool sdp_member(const SdpSet& s, Position p) {
    long long dx = p.x - s.base.x, dy = p.y - s.base.y;
    long long ux = s.period_u.x, uy = s.period_u.y;
    long long vx = s.period_v.x, vy = s.period_v.y;
    long long cross = ux * vy - uy * vx;
    if (cross != 0) {
        long long n_num = dx * vy - dy * vx;
        long long m_num = ux * dy - uy * dx;
        if (n_num % cross != 0 || m_num % cross != 0) return false;
        return n_num / cross >= 0 && m_num / cross >= 0;
    }
    bool u_zero = ux == 0 && uy == 0;
    bool v_zero = vx == 0 && vy == 0;
    if (u_zero && v_zero) return dx == 0 && dy == 0;
    if (u_zero) return detail::ray_member(vx, vy, dx, dy);
    if (v_zero) return detail::ray_member(ux, uy, dx, dy);
    // Parallel nonzero periods: work along the common primitive direction.
    long long g = std::gcd(std::abs(ux), std::abs(uy));
    long long gx = ux / g, gy = uy / g;
    if (dx * gy - dy * gx != 0) return false;
    long long beta = (gx != 0) ? vx / gx : vy / gy;
    if (vx != beta * gx || vy != beta * gy) return false;
    long long t = (gx != 0) ? dx / gx : dy / gy;
    if (dx != t * gx || dy != t * gy) return false;
    return detail::nonneg_combination(g, beta, t);
}

namespace detail {

// Intersects the interval of integer m with c*m in [lo, hi] into [mlo, mhi].
// c == 0 turns into a pure feasibility test. Returns false when empty.
inline bool clip_interval(long long c, long long lo, long long hi, long long& mlo,
                          long long& mhi) {
    if (c == 0) return lo <= 0 && 0 <= hi;
    long long l, h;
    if (c > 0) {
        l = div_ceil(lo, c);
        h = div_floor(hi, c);
    } else {
        l = div_ceil(hi, c);
        h = div_floor(lo, c);
    }
    mlo = std::max(mlo, l);
    mhi = std::min(mhi, h);
    return mlo <= mhi;
}

// Visits every point of the set inside the window; visitor returns false to
// abort. Point enumeration is duplicate-free in the independent case (the
// coefficient map is injective) and runs over line parameters otherwise.
template <typename Visitor>
bool visit_sdp_in_window(const SdpSet& s, const Window& w, Visitor&& visit) {
    long long bx = s.base.x, by = s.base.y;
    long long ux = s.period_u.x, uy = s.period_u.y;
    long long vx = s.period_v.x, vy = s.period_v.y;
    long long cross = ux * vy - uy * vx;

    if (cross != 0) {
        long long n_lo = 0, n_hi = 0;
        bool first = true;
        for (long long cx : {(long long)w.x_min, (long long)w.x_max})
            for (long long cy : {(long long)w.y_min, (long long)w.y_max}) {
                long long num = (cx - bx) * vy - (cy - by) * vx;
                long long lo = div_floor(num, cross), hi = div_ceil(num, cross);
                if (first) {
                    n_lo = lo;
                    n_hi = hi;
                    first = false;
                } else {
                    n_lo = std::min(n_lo, lo);
                    n_hi = std::max(n_hi, hi);
                }
            }
        n_lo = std::max(n_lo, 0LL);
        for (long long n = n_lo; n <= n_hi; ++n) {
            long long mlo = 0, mhi = std::numeric_limits<long long>::max();
            if (!clip_interval(vx, w.x_min - bx - n * ux, w.x_max - bx - n * ux, mlo, mhi))
                continue;
            if (!clip_interval(vy, w.y_min - by - n * uy, w.y_max - by - n * uy, mlo, mhi))
                continue;
            for (long long m = mlo; m <= mhi; ++m) {
                Position p{static_cast<int>(bx + n * ux + m * vx),
                           static_cast<int>(by + n * uy + m * vy)};
                if (!visit(p)) return false;
            }
        }
        return true;
    }

    bool u_zero = ux == 0 && uy == 0;
    bool v_zero = vx == 0 && vy == 0;
    if (u_zero && v_zero) {
        Position p{static_cast<int>(bx), static_cast<int>(by)};
        if (w.contains(p)) return visit(p);
        return true;
    }
    // Collinear: points lie on the line b + t*gprim; membership of each t is
    // a nonnegative-combination question.
    long long ax, ay, alpha, beta;
    if (u_zero) {
        long long g = std::gcd(std::abs(vx), std::abs(vy));
        ax = vx / g;
        ay = vy / g;
        alpha = 0;
        beta = g;
    } else {
        long long g = std::gcd(std::abs(ux), std::abs(uy));
        ax = ux / g;
        ay = uy / g;
        alpha = g;
        beta = (ax != 0) ? vx / ax : vy / ay;
        if (vx != beta * ax || vy != beta * ay) beta = 0;  // unreachable safety
    }
    long long tlo = std::numeric_limits<long long>::min() / 4;
    long long thi = std::numeric_limits<long long>::max() / 4;
    if (!clip_interval(ax, w.x_min - bx, w.x_max - bx, tlo, thi)) return true;
    if (!clip_interval(ay, w.y_min - by, w.y_max - by, tlo, thi)) return true;
    for (long long t = tlo; t <= thi; ++t) {
        if (!nonneg_combination(alpha, beta, t)) continue;
        Position p{static_cast<int>(bx + t * ax), static_cast<int>(by + t * ay)};
        if (!visit(p)) return false;
    }
    return true;
}

}  // namespace detail

// Exactly { p in w | sdp_member(s, p) }.
inline PositionSet sdp_enumerate(const SdpSet& s, const Window& w) {
    PositionSet out;
    for (int y = w.y_min; y <= w.y_max; ++y)
        for (int x = w.x_min; x <= w.x_max; ++x)
            if (sdp_member(s, {x, y})) out.insert({x, y});
    return out;
}

inline PositionSet union_enumerate(const SdpUnion& u, const Window& w) {
    PositionSet out;
    for (const auto& s : u.components) {
        PositionSet part = sdp_enumerate(s, w);
        out.insert(part.begin(), part.end());
    }
    return out;
}

// Candidate period norms are capped at a third of the smaller window side so
// every inferred period is supported by at least three repetitions.
inline int period_cap(const Window& w) {
    return std::max(1, std::min(w.width(), w.height()) / 3);
}
inline int default_margin(const Window& w) { return period_cap(w); }

inline Window shrink(const Window& w, int margin) {
    return {w.x_min + margin, w.x_max - margin, w.y_min + margin, w.y_max - margin};
}

struct DecomposeResult {
    bool ok = false;
    SdpUnion decomposition;  // partial when !ok
    Window inner;
    std::vector<Position> uncovered;
    std::string failure_reason;
};

namespace detail {

constexpr int kMaxPeriodCandidates = 32;
constexpr int kBaseTries = 24;

struct PairKey {
    int ux, uy, vx, vy;
    bool operator<(const PairKey& o) const {
        return std::tie(ux, uy, vx, vy) < std::tie(o.ux, o.uy, o.vx, o.vy);
    }
};

inline PairKey pair_key(Vec u, Vec v) {
    if (std::tie(u.y, u.x) > std::tie(v.y, v.x)) std::swap(u, v);
    return {u.x, u.y, v.x, v.y};
}

}  // namespace detail

// Greedy exact-cover search for a finite SDP union matching `black` on the
// window shrunk by `margin` on all four sides (interior points are unaffected
// by growth truncation at the window boundary). Candidate periods come from
// autocorrelation peaks of the black indicator; each greedy pick must cover
// only black points of the inner window. Deterministic tie-breaking: most
// newly covered points, then period pairs already in use, then smaller
// |u|+|v|, then canonical base, then canonical periods.
inline DecomposeResult decompose(const PositionSet& black, const Window& w, int margin,
                                 int max_components) {
    if (margin < 0) throw std::invalid_argument("decompose: negative margin");
    if (max_components < 1) throw std::invalid_argument("decompose: max_components < 1");

    DecomposeResult res;
    res.inner = shrink(w, margin);
    const Window inner = res.inner;
    if (!inner.valid()) {
        res.failure_reason = "margin exhausts window";
        return res;
    }

    const int iw = inner.width(), ih = inner.height();
    auto cell = [&](Position p) { return (p.y - inner.y_min) * iw + (p.x - inner.x_min); };
    std::vector<std::uint8_t> is_black(static_cast<std::size_t>(iw) * ih, 0);
    std::vector<Position> target;
    for (Position p : black)
        if (inner.contains(p)) {
            is_black[cell(p)] = 1;
            target.push_back(p);
        }
    if (target.empty()) {
        res.ok = true;
        return res;
    }

    // Autocorrelation of the indicator over displacements up to the cap.
    int cap = period_cap(inner);
    struct Cand {
        Vec d;
        long long count;
    };
    std::vector<Cand> cands;
    for (int dy = -cap; dy <= cap; ++dy)
        for (int dx = -cap; dx <= cap; ++dx) {
            if (dx == 0 && dy == 0) continue;
            long long c = 0;
            for (Position p : target) {
                Position q{p.x + dx, p.y + dy};
                if (inner.contains(q) && is_black[cell(q)]) ++c;
            }
            if (c > 0) cands.push_back({{dx, dy}, c});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.count != b.count) return a.count > b.count;
        int na = std::abs(a.d.x) + std::abs(a.d.y), nb = std::abs(b.d.x) + std::abs(b.d.y);
        if (na != nb) return na < nb;
        return std::tie(a.d.y, a.d.x) < std::tie(b.d.y, b.d.x);
    });
    if (static_cast<int>(cands.size()) > detail::kMaxPeriodCandidates)
        cands.resize(detail::kMaxPeriodCandidates);
    std::vector<Vec> periods{{0, 0}};
    for (const auto& c : cands) periods.push_back(c.d);

    std::vector<std::uint8_t> covered(static_cast<std::size_t>(iw) * ih, 0);
    std::size_t remaining = target.size();
    std::set<detail::PairKey> used_pairs;

    struct Pick {
        SdpSet set;
        long long gain = 0;
        bool reused_pair = false;
    };

    for (int round = 0; round < max_components && remaining > 0; ++round) {
        std::vector<Position> bases;
        for (Position p : target) {
            if (covered[cell(p)]) continue;
            bases.push_back(p);
            if (static_cast<int>(bases.size()) >= detail::kBaseTries) break;
        }

        bool have_best = false;
        Pick best;
        auto better = [&](const Pick& a, const Pick& b) {
            if (a.gain != b.gain) return a.gain > b.gain;
            if (a.reused_pair != b.reused_pair) return a.reused_pair;
            int na = std::abs(a.set.period_u.x) + std::abs(a.set.period_u.y) +
                     std::abs(a.set.period_v.x) + std::abs(a.set.period_v.y);
            int nb = std::abs(b.set.period_u.x) + std::abs(b.set.period_u.y) +
                     std::abs(b.set.period_v.x) + std::abs(b.set.period_v.y);
            if (na != nb) return na < nb;
            if (a.set.base != b.set.base) return a.set.base < b.set.base;
            auto ka = detail::pair_key(a.set.period_u, a.set.period_v);
            auto kb = detail::pair_key(b.set.period_u, b.set.period_v);
            return kb < ka ? false : ka < kb;
        };

        for (std::size_t pa = 0; pa < periods.size(); ++pa)
            for (std::size_t pb = pa; pb < periods.size(); ++pb)
                for (Position base : bases) {
                    SdpSet s{base, periods[pa], periods[pb]};
                    long long gain = 0;
                    bool exact = true;
                    detail::visit_sdp_in_window(s, inner, [&](Position p) {
                        if (!is_black[cell(p)]) {
                            exact = false;
                            return false;
                        }
                        if (!covered[cell(p)]) ++gain;
                        return true;
                    });
                    if (!exact || gain == 0) continue;
                    Pick pick{s, gain, used_pairs.count(detail::pair_key(s.period_u, s.period_v)) > 0};
                    if (!have_best || better(pick, best)) {
                        best = pick;
                        have_best = true;
                    }
                }

        if (!have_best) break;
        res.decomposition.components.push_back(best.set);
        used_pairs.insert(detail::pair_key(best.set.period_u, best.set.period_v));
        detail::visit_sdp_in_window(best.set, inner, [&](Position p) {
            if (!covered[cell(p)]) {
                covered[cell(p)] = 1;
                --remaining;
            }
            return true;
        });
    }

    if (remaining == 0) {
        res.ok = true;
        return res;
    }
    for (Position p : target)
        if (!covered[cell(p)]) res.uncovered.push_back(p);
    res.failure_reason = "uncovered points remain after " +
                         std::to_string(res.decomposition.components.size()) + " components";
    return res;
}

struct TheoremReport {
    std::string system_id;
    Window window;
    int margin = 0;
    Window inner;
    std::size_t black_size = 0;
    DirectednessReport directedness;
    bool decomposed = false;
    SdpUnion decomposition;
    std::string failure_reason;
    bool match = false;
    std::vector<Position> mismatches;
};

// Probes directedness, grows the system, extracts the black set, decomposes
// it, and re-checks the union against the black set on the interior window.
// Decomposition failure is reported as a non-matching report, not thrown.
inline TheoremReport verify_main_theorem(const TileAssemblySystem& sys, const Window& w,
                                         std::optional<int> margin_opt, int trials,
                                         int max_components, std::uint32_t rng_seed = 1,
                                         const std::string& system_id = "") {
    if (sys.temperature != 1)
        throw NotTemperatureOne("verify_main_theorem: system temperature is not 1");

    TheoremReport rep;
    rep.system_id = system_id;
    rep.window = w;
    rep.margin = margin_opt.value_or(default_margin(w));

    rep.directedness = probe_directedness(sys, w, trials, rng_seed);

    int max_steps = static_cast<int>(std::min<long long>(w.area() + 1, 1 << 28));
    RunResult grown = run(sys, w, OrderPolicy::canonical(), max_steps);
    PositionSet black = black_set(grown.assembly, sys);
    rep.black_size = black.size();

    DecomposeResult dec = decompose(black, w, rep.margin, max_components);
    rep.inner = dec.inner;
    rep.decomposed = dec.ok;
    rep.decomposition = dec.decomposition;
    if (!dec.ok) {
        rep.failure_reason = dec.failure_reason;
        rep.mismatches = dec.uncovered;
        rep.match = false;
        return rep;
    }

    PositionSet expected;
    for (Position p : black)
        if (dec.inner.contains(p)) expected.insert(p);
    PositionSet got = union_enumerate(rep.decomposition, dec.inner);
    std::set_symmetric_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                                  std::back_inserter(rep.mismatches));
    rep.match = rep.mismatches.empty() && rep.directedness.consistent;
    if (!rep.directedness.consistent)
        rep.failure_reason = "system not order-invariant within window/trials";
    return rep;
}

}  // namespace atam
