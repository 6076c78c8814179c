// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "catzero/catzero.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/random_pip.hpp"

using namespace catzero;
using testing_support::cube_of;
using testing_support::fixture;
using testing_support::pt;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        out.pass = false;
        out.detail += " (time limit " + std::to_string(limit_seconds) + " s exceeded)";
    }
    if (!out.pass) ++failures;
    std::printf("%s C%d %s: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

Outcome rectangle() {
    const auto path = geodesic(fixture("grid32"), Point(5), Point(5, 1.0));
    const double err = std::abs(path.length - std::sqrt(13.0));
    return {err <= 1e-8 && path.certified, "length " + num(path.length) + ", error " + num(err)};
}

Outcome book() {
    const auto path = geodesic(fixture("book"), pt({0.5, 0.2, 0}), pt({0, 0.8, 0.5}));
    const double err = std::abs(path.length - std::sqrt(1.36));
    const double bp = path.breakpoints.size() == 3 ? max_abs_diff(path.breakpoints[1], pt({0, 0.5, 0})) : 1.0;
    return {err <= 1e-6 && bp <= 1e-6 && path.certified,
            "length " + num(path.length) + ", breakpoint deviation " + num(bp)};
}

Outcome shortcut_regression() {
    const auto g = fixture("grid22");
    const auto path = geodesic(g, pt({0.2, 0, 0, 0}), pt({1, 1, 1, 0.8}));
    std::ostringstream d;
    bool ok = path.certified && path.shortcuts.size() == 1 && !path.trace.empty();
    if (!ok) {
        d << "certified " << path.certified << ", shortcuts " << path.shortcuts.size();
        return {false, d.str()};
    }
    const double start = path.trace.front().length;
    const double weight = path.shortcuts.front().cover_weight;
    const auto inserted = path.frame.lift(path.shortcuts.front().cube);
    ok = std::abs(start - 2 * std::sqrt(1.64)) <= 1e-8 && std::abs(weight - 1.28 / 1.64) <= 1e-8 &&
         inserted == cube_of(g, {"1", "2", "3"}, {"2", "3"}) && std::abs(path.length - 1.8 * std::sqrt(2.0)) <= 1e-8;
    d << "start " << num(start) << ", cover weight " << num(weight) << ", final " << num(path.length)
      << ", shortcuts " << path.shortcuts.size();
    return {ok, d.str()};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20240401);
    double worst = 0.0;
    int bad = 0;
    std::size_t sequences = 0, shortcuts = 0;
    for (int t = 0; t < 200; ++t) {
        const auto p = testing_support::random_pip(rng, {4, 7, 0.2, 3});
        // Every fourth case uses arbitrary, possibly non-generic endpoints.
        Point x, y;
        if (t % 4 == 0) {
            x = testing_support::random_point(p, rng, false);
            y = testing_support::random_point(p, rng, false);
        } else {
            std::tie(x, y) = testing_support::random_far_pair(p, rng);
        }
        std::size_t count = 0;
        const auto main = geodesic(p, x, y);
        const double dev = std::abs(main.length - brute_force_geodesic(p, x, y, kDefaultTolerance,
                                                                       kDefaultSequenceGuard, &count).length);
        sequences += count;
        shortcuts += main.shortcuts.size();
        worst = std::max(worst, dev);
        if (dev > 1e-6) ++bad;
    }
    return {bad == 0, "200 cases, " + std::to_string(sequences) + " sequences enumerated, " +
                          std::to_string(shortcuts) + " shortcuts taken, max deviation " + num(worst) +
                          ", failures " + std::to_string(bad)};
}

Outcome s8_equations() {
    const double a = 0.5, b = 0.3, c = 0.4, d = 0.7;
    const auto path = geodesic(fixture("s8"), pt({a, b, 0, 0, 0}), pt({1, 1, 1, c, d}));
    if (path.breakpoints.size() != 4) return {false, "expected two breakpoints"};
    const auto& p1 = path.breakpoints[1];
    const auto& p2 = path.breakpoints[2];
    const double shape = std::max(max_abs_diff(p1, pt({1, p1[1], 0, 0, 0})), max_abs_diff(p2, pt({1, 1, 1, p2[3], 0})));
    const double x = p1[1];
    const double y = p2[3];
    const double e1 = (b - x) * (b - x) * ((x - 1) * (x - 1) + y * y + 1) -
                      (x - 1) * (x - 1) * ((a - 1) * (a - 1) + (b - x) * (b - x));
    const double e2 = y * y * ((y - c) * (y - c) + d * d) - (y - c) * (y - c) * ((x - 1) * (x - 1) + y * y + 1);
    const bool ok = path.certified && shape <= 1e-9 && std::abs(e1) < 1e-6 && std::abs(e2) < 1e-6;
    return {ok, "x " + num(x) + ", y " + num(y) + ", residuals " + num(e1) + ", " + num(e2)};
}

Outcome bent() {
    const auto p = fixture("bent");
    const auto mid = cube_of(p, {"1", "2", "3", "4"}, {"3", "4"});
    const std::size_t i3 = p.index("3"), i4 = p.index("4");
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    int inside = 0, uncertified = 0;
    for (int t = 0; t < 20; ++t) {
        Point x(p.size());
        x[p.index("1")] = unit(rng);
        x[p.index("3")] = unit(rng);
        Point y(p.size(), 1.0);
        y[p.index("4")] = unit(rng);
        y[p.index("6")] = unit(rng);
        const auto path = geodesic(p, x, y);
        if (!path.certified) ++uncertified;
        for (std::size_t k = 1; k < path.breakpoints.size(); ++k) {
            if (distance(path.breakpoints[k - 1], path.breakpoints[k]) <= 1e-7) continue;
            Point m(p.size());
            for (std::size_t j = 0; j < p.size(); ++j) m[j] = 0.5 * (path.breakpoints[k - 1][j] + path.breakpoints[k][j]);
            const bool interior = cube_contains(mid, m, 1e-9) && m[i3] > 1e-7 && m[i3] < 1 - 1e-7 && m[i4] > 1e-7 &&
                                  m[i4] < 1 - 1e-7;
            if (interior) ++inside;
        }
    }
    return {inside == 0 && uncertified == 0, "20 pairs, legs through the relative interior " + std::to_string(inside) +
                                                 ", uncertified " + std::to_string(uncertified)};
}

Outcome round_trips() {
    std::mt19937_64 rng(77);
    int bad_halfspace = 0, bad_reroot = 0, bad_euler = 0;
    for (int t = 0; t < 500; ++t) {
        const auto p = testing_support::random_pip(rng, {1, 9, 0.3, 4});
        if (!(halfspace_to_pip(pip_to_halfspace(p)) == p)) ++bad_halfspace;
        const auto ideals = enumerate_consistent_ideals(p);
        const auto& v = ideals[std::uniform_int_distribution<std::size_t>(0, ideals.size() - 1)(rng)].members();
        const auto r = reroot(p, v);
        const auto back = reroot(r.pip, r.transport_vertex(ElementSet(p.size())));
        if (!(back.pip == p)) ++bad_reroot;
        if (euler_characteristic(p) != 1 || euler_characteristic(r.pip) != 1) ++bad_euler;
    }
    return {bad_halfspace + bad_reroot + bad_euler == 0,
            "500 PIPs, failures: halfspace " + std::to_string(bad_halfspace) + ", reroot " +
                std::to_string(bad_reroot) + ", euler " + std::to_string(bad_euler)};
}

Outcome interval_embedding() {
    std::mt19937_64 rng(88);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        const auto q = testing_support::random_pip(rng, {1, 9, 0.3, 0});
        const auto emb = embed_interval(q);
        bool ok = emb.dimension() == width(q) && emb.dimension() == testing_support::width_bruteforce(q);
        std::set<std::vector<int>> images;
        for (const auto& [ideal, coords] : emb.vertices) images.insert(coords);
        ok = ok && images.size() == emb.vertices.size();
        for (const auto& [ideal, coords] : emb.vertices)
            for (std::size_t e = 0; e < q.size(); ++e) {
                if (ideal.test(e)) continue;
                auto up = ideal;
                up.set(e);
                if (!q.is_down_closed(up)) continue;
                const auto next = lattice_point(emb.chains, up);
                int l1 = 0;
                for (std::size_t k = 0; k < next.size(); ++k) l1 += std::abs(next[k] - coords[k]);
                ok = ok && l1 == 1;
            }
        if (!ok) ++bad;
    }
    return {bad == 0, "200 posets, failures " + std::to_string(bad)};
}

// Each cell as the sorted list of its vertex index lists.
std::multiset<std::vector<std::vector<std::size_t>>> sorted_cells(const std::vector<std::vector<ElementSet>>& cells) {
    std::multiset<std::vector<std::vector<std::size_t>>> out;
    for (const auto& c : cells) {
        std::vector<std::vector<std::size_t>> v;
        for (const auto& s : c) v.push_back(s.indices());
        std::sort(v.begin(), v.end());
        out.insert(std::move(v));
    }
    return out;
}

Outcome realization() {
    std::mt19937_64 rng(99);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
        const auto p = testing_support::random_pip(rng, {1, 8, 0.3, 3});
        const auto sys = pip_to_reconfigurable(p);
        const auto sc = state_complex(sys);
        std::vector<std::vector<ElementSet>> from_states, from_complex;
        for (const auto& c : sc.cubes) {
            std::vector<ElementSet> v;
            for (auto i : c) v.push_back(sys.states[i]);
            from_states.push_back(std::move(v));
        }
        for (const auto& c : enumerate_cubes(p)) from_complex.push_back(cube_vertices(c));
        const bool ok = sc.vertex_count == enumerate_consistent_ideals(p).size() &&
                        sorted_cells(from_states) == sorted_cells(from_complex);
        if (!ok) ++bad;
    }
    return {bad == 0, "100 PIPs, failures " + std::to_string(bad)};
}

Outcome solver_robustness() {
    std::mt19937_64 rng(1010);
    double worst = 0.0;
    int instances = 0;
    while (instances < 50) {
        const auto p = testing_support::random_pip(rng, {3, 8, 0.25, 2});
        const auto [x, y] = testing_support::random_far_pair(p, rng);
        const auto frame = interval_endpoints(p, x, y);
        const auto seq = extended_normal_cube_path(frame.q, frame.x, frame.y);
        std::size_t free_coords = 0;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) free_coords += seq.shared_face(i).free.count();
        if (free_coords == 0) continue;
        ++instances;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int r = 0; r < 10; ++r) {
            const auto init = random_breakpoints(seq, rng);
            const auto sol = touring_solve(seq, frame.x, frame.y, {}, &init);
            lo = std::min(lo, sol.length);
            hi = std::max(hi, sol.length);
        }
        worst = std::max(worst, hi - lo);
    }
    return {worst <= 1e-7, "50 instances x 10 restarts, max spread " + num(worst)};
}

} // namespace

int main() {
    criterion(1, "rectangle isometry", 1.0, rectangle);
    criterion(2, "book unfolding", 1.0, book);
    criterion(3, "shortcut regression", 0.0, shortcut_regression);
    criterion(4, "oracle equivalence", 300.0, oracle_equivalence);
    criterion(5, "S8 zero-tension equations", 5.0, s8_equations);
    criterion(6, "bent poset", 0.0, bent);
    criterion(7, "structural round-trips", 0.0, round_trips);
    criterion(8, "interval embedding", 0.0, interval_embedding);
    criterion(9, "realization", 0.0, realization);
    criterion(10, "solver robustness", 0.0, solver_robustness);
    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
