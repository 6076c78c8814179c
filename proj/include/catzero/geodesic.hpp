#ifndef CATZERO_GEODESIC_HPP
#define CATZERO_GEODESIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "catzero/complex.hpp"
#include "catzero/element_set.hpp"
#include "catzero/error.hpp"
#include "catzero/interval.hpp"
#include "catzero/pip.hpp"
#include "catzero/point.hpp"
#include "catzero/touring.hpp"
#include "catzero/vertex_cover.hpp"

namespace catzero {

constexpr double kDefaultTolerance = 1e-8;
constexpr std::size_t kDefaultSequenceGuard = 100000;

/// Cubes C(I_1, M_1), ..., C(I_k, M_k) over an interval poset Q.
struct CubeSequence {
    std::vector<Cube> cubes;

    std::size_t size() const noexcept { return cubes.size(); }
    bool empty() const noexcept { return cubes.empty(); }
    const Cube& operator[](std::size_t i) const { return cubes[i]; }

    /// Face C(I_i, M_i n M_{i+1}) shared by cubes i and i+1.
    Cube shared_face(std::size_t i) const { return {cubes[i].ideal, cubes[i].free & cubes[i + 1].free}; }

    friend bool operator==(const CubeSequence&, const CubeSequence&) = default;
    friend bool operator<(const CubeSequence& a, const CubeSequence& b) {
        return std::lexicographical_compare(a.cubes.begin(), a.cubes.end(), b.cubes.begin(), b.cubes.end());
    }
};

/// Ideals I_j = I_{j-1} u min(Q \ I_{j-1}) until Q is exhausted.
inline std::vector<OrderIdeal> normal_cube_path(const Pip& q) {
    if (q.has_inconsistencies()) throw Error(Errc::HasInconsistentPairs, "normal cube paths need a consistent poset");
    std::vector<OrderIdeal> out;
    ElementSet current(q.size());
    while (current.count() < q.size()) {
        current |= minimal_of(q, q.all() - current);
        out.emplace_back(current, true);
    }
    return out;
}

struct SequenceCheck {
    bool valid = true;
    std::string reason;

    explicit operator bool() const noexcept { return valid; }
};

/// Increasing ideals ending at Q, increments inside the free sets, maximal
/// antichain free sets, x in the first cube and y in the last.
inline SequenceCheck check_cube_sequence(const Pip& q, const CubeSequence& seq, const Point& x, const Point& y,
                                         double tol = kEmbeddingTolerance) {
    auto fail = [](std::string why) { return SequenceCheck{false, std::move(why)}; };
    if (seq.empty()) return fail("sequence is empty");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& c = seq[i];
        const auto at = " at cube " + std::to_string(i + 1);
        if (!is_valid_cube(q, c)) return fail("not a cube of X_Q" + at);
        if (!is_maximal_antichain(q, c.free)) return fail("free set is not a maximal antichain" + at);
        if (i > 0) {
            const auto& prev = seq[i - 1].ideal;
            if (!prev.is_subset_of(c.ideal) || prev == c.ideal) return fail("ideals do not strictly increase" + at);
            if (!(c.ideal - prev).is_subset_of(c.free)) return fail("increment is not inside the free set" + at);
        }
    }
    if (seq.cubes.back().ideal != q.all()) return fail("last ideal is not Q");
    if (!cube_contains(seq.cubes.front(), x, tol)) return fail("first cube does not contain x");
    if (!cube_contains(seq.cubes.back(), y, tol)) return fail("last cube does not contain y");
    return {};
}

inline bool is_valid_cube_sequence(const Pip& q, const CubeSequence& seq, const Point& x, const Point& y,
                                   double tol = kEmbeddingTolerance) {
    return static_cast<bool>(check_cube_sequence(q, seq, x, y, tol));
}

/// Normal cube path with every free set enlarged to max(I_j).
inline CubeSequence extended_normal_cube_path(const Pip& q, const Point& x, const Point& y,
                                              double tol = kEmbeddingTolerance) {
    CubeSequence seq;
    for (const auto& ideal : normal_cube_path(q)) seq.cubes.push_back({ideal.members(), maximal_of(q, ideal.members())});
    if (seq.empty()) seq.cubes.push_back({q.all(), q.all()});
    if (auto check = check_cube_sequence(q, seq, x, y, tol); !check)
        throw Error(Errc::NotValid, "extended normal cube path: " + check.reason);
    return seq;
}

/// Box of a face in the standard embedding.
inline Box face_box(const Cube& face) {
    const std::size_t n = face.ideal.universe();
    Box b{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t j = 0; j < n; ++j) {
        if (face.free.test(j)) {
            b.hi[j] = 1.0;
        } else if (face.ideal.test(j)) {
            b.lo[j] = 1.0;
            b.hi[j] = 1.0;
        }
    }
    return b;
}

inline TouringProblem touring_problem(const CubeSequence& seq, const Point& x, const Point& y) {
    TouringProblem prob{x, y, {}};
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) prob.boxes.push_back(face_box(seq.shared_face(i)));
    return prob;
}

/// Shortest path through the shared faces of `seq`. `initial` holds the
/// interior breakpoints only.
inline TouringResult touring_solve(const CubeSequence& seq, const Point& x, const Point& y,
                                   const TouringOptions& opt = {}, const std::vector<Point>* initial = nullptr) {
    return solve_touring(touring_problem(seq, x, y), opt, initial);
}

/// Uniformly random interior breakpoints, one per shared face.
template <class Rng>
std::vector<Point> random_breakpoints(const CubeSequence& seq, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> out;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const auto box = face_box(seq.shared_face(i));
        Point p(box.size());
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * unit(rng);
        out.push_back(std::move(p));
    }
    return out;
}

/// Largest violation of the zero-tension condition over interior
/// breakpoints. Breakpoints within 10*tol of each other are merged; the
/// projection uses the free coordinates of the merged faces that are
/// strictly inside (0, 1), since a coordinate at a bound only needs a
/// one-sided balance.
inline double zero_tension_residual(const CubeSequence& seq, const std::vector<Point>& points,
                                    double tol = kDefaultTolerance) {
    const double merge = 10.0 * tol;
    const std::size_t last = points.size() - 1;
    std::vector<double> leg(last);
    bool any = false;
    for (std::size_t l = 0; l < last; ++l) {
        leg[l] = distance(points[l], points[l + 1]);
        any = any || leg[l] > merge;
    }
    if (!any) throw Error(Errc::DegenerateLeg, "every leg of the path has collapsed");

    double worst = 0.0;
    std::size_t i = 1;
    while (i < last) {
        std::size_t j = i;
        while (j + 1 < last && leg[j] <= merge) ++j; // group i..j
        const bool touches_end = leg[i - 1] <= merge || leg[j] <= merge;
        if (!touches_end) {
            ElementSet coords = seq.shared_face(i - 1).free;
            for (std::size_t b = i; b <= j; ++b) coords &= seq.shared_face(b - 1).free;
            const auto& p = points[i];
            double s = 0.0;
            coords.for_each([&](std::size_t c) {
                if (p[c] <= merge || p[c] >= 1.0 - merge) return;
                const double in = (points[i][c] - points[i - 1][c]) / leg[i - 1];
                const double out = (points[j + 1][c] - points[j][c]) / leg[j];
                s += (in - out) * (in - out);
            });
            worst = std::max(worst, std::sqrt(s));
        }
        i = j + 1;
    }
    return worst;
}

struct ShortcutWitness {
    std::size_t breakpoint = 0; // i: between cubes i and i+1 (1-based)
    ElementSet a_in;            // A_i
    ElementSet b_in;            // B_i
    ElementSet a_out;           // A_{i+1}
    ElementSet b_out;           // B_{i+1}
    Cube cube;
    double cover_weight = 0.0;
};

/// No-shortcut test at the breakpoint between `ci` and `cnext`. Weights are
/// squared unit-leg components, normalized on each side of the bipartite
/// graph so that covering one whole side weighs exactly 1.
inline std::optional<ShortcutWitness> shortcut_check(const Pip& q, const Cube& ci, const Cube& cnext,
                                                     const Point& prev, const Point& at, const Point& next,
                                                     double tol = kDefaultTolerance) {
    const auto left = (ci.free - cnext.free).indices();
    const auto right = (cnext.free - ci.free).indices();
    if (left.empty() || right.empty()) return std::nullopt;

    WeightedBipartiteGraph g;
    double in_norm = 0.0;
    double out_norm = 0.0;
    for (auto j : left) {
        const double d = at[j] - prev[j];
        g.left_weight.push_back(d * d);
        in_norm += d * d;
    }
    for (auto k : right) {
        const double d = next[k] - at[k];
        g.right_weight.push_back(d * d);
        out_norm += d * d;
    }
    const double floor = 100.0 * tol * tol;
    if (in_norm <= floor || out_norm <= floor) return std::nullopt;
    for (auto& w : g.left_weight) w /= in_norm;
    for (auto& w : g.right_weight) w /= out_norm;

    for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b) {
            if (q.less(left[a], right[b])) g.edges.emplace_back(a, b);
            else if (q.less(right[b], left[a]))
                throw Error(Errc::NotValid, "element '" + q.name(right[b]) + "' precedes '" + q.name(left[a]) +
                                                "' across consecutive cubes");
        }

    std::vector<std::pair<int, std::size_t>> order;
    {
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < left.size() || b < right.size()) {
            if (b == right.size() || (a < left.size() && left[a] < right[b])) order.emplace_back(0, a++);
            else order.emplace_back(1, b++);
        }
    }
    const auto cover = minimum_weight_vertex_cover(g, order);
    if (!(cover.weight < 1.0 - 10.0 * tol)) return std::nullopt;

    ShortcutWitness w;
    const std::size_t n = q.size();
    w.a_in = ElementSet(n);
    w.b_in = ElementSet(n);
    w.a_out = ElementSet(n);
    w.b_out = ElementSet(n);
    for (std::size_t a = 0; a < left.size(); ++a) (cover.left[a] ? w.a_in : w.b_in).set(left[a]);
    for (std::size_t b = 0; b < right.size(); ++b) (cover.right[b] ? w.b_out : w.a_out).set(right[b]);
    w.cube = {cnext.ideal - w.b_out, (ci.free & cnext.free) | w.b_in | w.a_out};
    w.cover_weight = cover.weight;
    return w;
}

struct RefitResult {
    CubeSequence sequence;
    std::vector<Point> breakpoints; // interior warm start for the refitted sequence
    bool changed = false;
    std::string diagnostic;
};

/// Drops cubes crossed with a leg of length <= 10*tol, resets every free set
/// to max(I_i) and revalidates; falls back to the input when that fails.
inline RefitResult refit_sequence(const Pip& q, const CubeSequence& seq, const std::vector<Point>& points,
                                  const Point& x, const Point& y, double tol = kDefaultTolerance) {
    RefitResult r;
    r.sequence = seq;
    r.breakpoints.assign(points.begin() + 1, points.end() - 1);
    const double merge = 10.0 * tol;
    const std::size_t k = seq.size();

    std::vector<char> drop(k, 0);
    std::size_t dropped = 0;
    for (std::size_t c = 0; c < k; ++c)
        if (distance(points[c], points[c + 1]) <= merge) {
            drop[c] = 1;
            ++dropped;
        }
    if (dropped == 0 || dropped == k) return r;

    // Dropping cube c merges breakpoints c and c+1 (1-based, 0 = x, k = y);
    // keep the one that is not an endpoint.
    std::vector<char> keep_bp(k + 1, 1);
    for (std::size_t c = 0; c < k; ++c) {
        if (!drop[c]) continue;
        if (c + 1 < k) keep_bp[c + 1] = 0;
        else keep_bp[c] = 0;
    }
    CubeSequence out;
    for (std::size_t c = 0; c < k; ++c)
        if (!drop[c]) out.cubes.push_back({seq[c].ideal, maximal_of(q, seq[c].ideal)});
    std::vector<Point> warm;
    for (std::size_t b = 1; b < k; ++b)
        if (keep_bp[b]) warm.push_back(points[b]);

    auto check = check_cube_sequence(q, out, x, y, std::max(kEmbeddingTolerance, merge));
    if (check && warm.size() + 1 != out.size()) check = {false, "breakpoint bookkeeping mismatch"};
    if (!check) {
        r.diagnostic = "refit kept the input sequence: " + check.reason;
        return r;
    }
    r.sequence = std::move(out);
    r.breakpoints = std::move(warm);
    r.changed = true;
    return r;
}

/// Inserts the witness cube between cubes i and i+1 (1-based breakpoint i).
inline CubeSequence insert_shortcut(const CubeSequence& seq, const ShortcutWitness& w) {
    CubeSequence out = seq;
    out.cubes.insert(out.cubes.begin() + static_cast<std::ptrdiff_t>(w.breakpoint), w.cube);
    return out;
}

/// Number of maximal antichains of Q, i.e. ideals whose maximal elements
/// form a maximal antichain.
inline std::size_t count_maximal_antichains(const Pip& q, std::size_t guard = kDefaultIdealGuard) {
    std::size_t count = 0;
    for (const auto& ideal : enumerate_consistent_ideals(q, guard))
        if (is_maximal_antichain(q, maximal_of(q, ideal.members()))) ++count;
    return count;
}

struct TraceEntry {
    CubeSequence sequence; // interval frame
    double length = 0.0;
};

struct GeodesicEvent {
    std::size_t iteration = 0;
    const CubeSequence* sequence = nullptr;
    const TouringResult* touring = nullptr;
    double residual = 0.0;
    const ShortcutWitness* witness = nullptr; // null when the path is shortcut-clean
    std::string note;
};

struct GeodesicOptions {
    double tol = kDefaultTolerance;
    std::size_t max_iterations = 0; // 0: 10 * (maximal antichains of Q)^2
    std::size_t touring_steps = 100000;
    std::uint64_t seed = 0;         // nonzero: random initial breakpoints
    std::function<void(const GeodesicEvent&)> observer;
};

struct Certificate {
    double zero_tension_residual = 0.0;
    bool shortcut_clean = false;
};

struct GeodesicPath {
    std::vector<Point> breakpoints; // x, interior breakpoints, y; original frame
    std::vector<Cube> carrier;      // original frame
    double length = 0.0;
    Certificate certificate;
    bool certified = false;
    bool budget_exhausted = false;
    bool touring_converged = true;
    std::size_t iterations = 0;
    std::vector<TraceEntry> trace;
    std::vector<ShortcutWitness> shortcuts; // interval frame

    IntervalFrame frame;
    CubeSequence interval_sequence;
    std::vector<Point> interval_points;
};

namespace detail {

inline void lift_path(GeodesicPath& path) {
    path.breakpoints.clear();
    path.carrier.clear();
    for (const auto& p : path.interval_points) path.breakpoints.push_back(path.frame.lift(p));
    for (const auto& c : path.interval_sequence.cubes) path.carrier.push_back(path.frame.lift(c));
    path.length = path_length(path.breakpoints);
}

inline std::size_t default_budget(const Pip& q) {
    if (q.size() > kDefaultIdealGuard) return 10'000'000;
    const auto m = count_maximal_antichains(q);
    return 10 * m * m;
}

} // namespace detail

/// Geodesic between x and y inside X_Q (x, y already in the interval frame).
inline GeodesicPath geodesic_in_interval(const Pip& q, const Point& x, const Point& y,
                                         const GeodesicOptions& opt = {}) {
    GeodesicPath path;
    TouringOptions topt;
    topt.tol = opt.tol;
    topt.max_steps = opt.touring_steps;
    const double merge = 10.0 * opt.tol;
    auto notify = [&](GeodesicEvent e) {
        if (opt.observer) opt.observer(e);
    };

    CubeSequence seq = extended_normal_cube_path(q, x, y);
    const std::size_t budget = opt.max_iterations ? opt.max_iterations : detail::default_budget(q);

    std::optional<std::vector<Point>> warm;
    if (opt.seed != 0) {
        std::mt19937_64 rng(opt.seed);
        warm = random_breakpoints(seq, rng);
    }

    CubeSequence best_seq;
    TouringResult best;
    best.length = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 1;; ++iter) {
        if (iter > budget) {
            path.budget_exhausted = true;
            seq = best_seq;
            path.interval_sequence = best_seq;
            path.interval_points = best.points;
            path.touring_converged = best.converged();
            break;
        }
        path.iterations = iter;
        auto sol = touring_solve(seq, x, y, topt, warm ? &*warm : nullptr);
        warm.reset();

        for (std::size_t round = 0; round < seq.size(); ++round) {
            auto fit = refit_sequence(q, seq, sol.points, x, y, opt.tol);
            if (!fit.diagnostic.empty()) notify({iter, &seq, &sol, 0.0, nullptr, fit.diagnostic});
            if (!fit.changed) break;
            auto resolved = touring_solve(fit.sequence, x, y, topt, &fit.breakpoints);
            if (resolved.length > sol.length + opt.tol) {
                notify({iter, &seq, &sol, 0.0, nullptr, "refit lengthened the path; kept the input sequence"});
                break;
            }
            seq = std::move(fit.sequence);
            sol = std::move(resolved);
        }
        path.trace.push_back({seq, sol.length});
        if (sol.length < best.length) {
            best = sol;
            best_seq = seq;
        }

        const bool collapsed = sol.length <= merge;
        const double residual = collapsed ? 0.0 : zero_tension_residual(seq, sol.points, opt.tol);
        std::optional<ShortcutWitness> witness;
        if (!collapsed)
            for (std::size_t i = 1; i < seq.size() && !witness; ++i) {
                witness = shortcut_check(q, seq[i - 1], seq[i], sol.points[i - 1], sol.points[i], sol.points[i + 1],
                                         opt.tol);
                if (witness) witness->breakpoint = i;
            }
        notify({iter, &seq, &sol, residual, witness ? &*witness : nullptr, {}});

        if (!witness) {
            path.interval_sequence = seq;
            path.interval_points = sol.points;
            path.certificate = {residual, true};
            path.touring_converged = sol.converged();
            path.certified = residual <= merge && sol.converged();
            break;
        }
        auto next = insert_shortcut(seq, *witness);
        if (auto check = check_cube_sequence(q, next, x, y, std::max(kEmbeddingTolerance, merge)); !check)
            throw Error(Errc::NotValid, "shortcut insertion broke the sequence: " + check.reason);
        path.shortcuts.push_back(*witness);
        seq = std::move(next);
    }
    return path;
}

/// Geodesic between two points of X_P, computed in the interval X[v, w].
inline GeodesicPath geodesic(const Pip& p, const Point& x, const Point& y, const GeodesicOptions& opt = {}) {
    auto frame = interval_endpoints(p, x, y);
    auto path = geodesic_in_interval(frame.q, frame.x, frame.y, opt);
    path.frame = std::move(frame);
    detail::lift_path(path);
    return path;
}

struct BruteForceResult {
    CubeSequence sequence;
    std::vector<Point> points;
    double length = std::numeric_limits<double>::infinity();
    std::size_t sequences = 0;
};

/// Every valid cube sequence of X_Q from x to y, up to `guard` of them.
inline std::vector<CubeSequence> enumerate_valid_sequences(const Pip& q, const Point& x, const Point& y,
                                                           std::size_t guard = kDefaultSequenceGuard,
                                                           double tol = kEmbeddingTolerance) {
    std::vector<Cube> good;
    for (const auto& ideal : enumerate_consistent_ideals(q)) {
        auto maxes = maximal_of(q, ideal.members());
        if (is_maximal_antichain(q, maxes)) good.push_back({ideal.members(), std::move(maxes)});
    }
    const auto top = q.all();
    std::vector<CubeSequence> out;
    CubeSequence current;
    auto extend = [&](auto&& self) -> void {
        const Cube last = current.cubes.back();
        if (last.ideal == top) {
            if (cube_contains(last, y, tol)) {
                if (out.size() >= guard)
                    throw Error(Errc::TooLarge, "more than " + std::to_string(guard) + " valid cube sequences");
                out.push_back(current);
            }
            return;
        }
        for (const auto& c : good) {
            if (!last.ideal.is_subset_of(c.ideal) || last.ideal == c.ideal) continue;
            if (!(c.ideal - last.ideal).is_subset_of(c.free)) continue;
            current.cubes.push_back(c);
            self(self);
            current.cubes.pop_back();
        }
    };
    for (const auto& c : good) {
        if (!cube_contains(c, x, tol)) continue;
        current.cubes = {c};
        extend(extend);
    }
    return out;
}

/// Global minimum over all valid cube sequences; ties go to the
/// lexicographically smallest sequence.
inline BruteForceResult brute_force_in_interval(const Pip& q, const Point& x, const Point& y,
                                                double tol = kDefaultTolerance,
                                                std::size_t guard = kDefaultSequenceGuard) {
    TouringOptions topt;
    topt.tol = tol;
    BruteForceResult best;
    const auto all = enumerate_valid_sequences(q, x, y, guard);
    best.sequences = all.size();
    for (const auto& seq : all) {
        auto sol = touring_solve(seq, x, y, topt);
        const bool better = sol.length < best.length - 1e-12 ||
                            (std::abs(sol.length - best.length) <= 1e-12 && seq < best.sequence);
        if (better) {
            best.length = sol.length;
            best.points = std::move(sol.points);
            best.sequence = seq;
        }
    }
    return best;
}

inline GeodesicPath brute_force_geodesic(const Pip& p, const Point& x, const Point& y,
                                         double tol = kDefaultTolerance, std::size_t guard = kDefaultSequenceGuard,
                                         std::size_t* sequences = nullptr) {
    GeodesicPath path;
    path.frame = interval_endpoints(p, x, y);
    auto best = brute_force_in_interval(path.frame.q, path.frame.x, path.frame.y, tol, guard);
    if (sequences) *sequences = best.sequences;
    path.interval_sequence = std::move(best.sequence);
    path.interval_points = std::move(best.points);
    path.iterations = best.sequences;
    detail::lift_path(path);
    return path;
}

} // namespace catzero

#endif // CATZERO_GEODESIC_HPP
