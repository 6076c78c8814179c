// catzero: command-line front end for the catzero library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "catzero/catzero.hpp"
#include "catzero/io.hpp"

namespace {

using namespace catzero;

enum Exit { kOk = 0, kInvalid = 2, kUncertified = 3, kGuard = 4 };

enum class LogLevel { Off, Info, Trace };

struct Config {
    double tol = kDefaultTolerance;
    std::size_t max_iter = 0;
    std::uint64_t seed = 0;
    std::string json_path;
    bool quiet = false;
};

struct Inputs {
    std::string pip;
    std::string from;
    std::string to;
    std::string vertex;
    std::string system;
};

LogLevel log_level() {
    const char* env = std::getenv("CATZERO_LOG");
    if (!env) return LogLevel::Off;
    const std::string v = env;
    if (v == "info") return LogLevel::Info;
    if (v == "trace") return LogLevel::Trace;
    if (v == "off" || v.empty()) return LogLevel::Off;
    throw Error(Errc::ParseError, "CATZERO_LOG must be off, info or trace");
}

std::string set_text(const Pip& p, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out += ",";
        first = false;
        out += p.name(i);
    });
    return out + "}";
}

std::string cube_text(const Pip& p, const Cube& c) { return "C(" + set_text(p, c.ideal) + "," + set_text(p, c.free) + ")"; }

// JSON goes to --json when given, otherwise to stdout; summaries go to stdout.
void emit(const Config& cfg, const json& j, const std::string& summary) {
    const auto text = to_text(j) + "\n";
    if (!cfg.json_path.empty()) {
        std::ofstream out(cfg.json_path);
        if (!out) throw Error(Errc::ParseError, "cannot write '" + cfg.json_path + "'");
        out << text;
        if (!cfg.quiet) std::cout << summary;
    } else if (!cfg.quiet) {
        std::cout << text;
    }
}

Pip load_pip(const Inputs& in) { return pip_from_json(read_json_file(in.pip)); }

std::pair<Point, Point> load_endpoints(const Pip& p, const Inputs& in) {
    return {point_from_json(p, read_json_file(in.from)), point_from_json(p, read_json_file(in.to))};
}

GeodesicOptions geodesic_options(const Config& cfg) {
    GeodesicOptions opt;
    opt.tol = cfg.tol;
    opt.max_iterations = cfg.max_iter;
    opt.seed = cfg.seed;
    const auto level = log_level();
    if (level == LogLevel::Off) return opt;
    // Events carry interval-frame data.
    opt.observer = [level](const GeodesicEvent& e) {
        std::ostringstream line;
        line << "[catzero] iter " << e.iteration;
        if (!e.note.empty()) {
            std::cerr << line.str() << " note: " << e.note << "\n";
            return;
        }
        line.precision(12);
        line << " length " << e.touring->length << " residual " << e.residual << " touring-steps " << e.touring->steps
             << (e.witness ? " shortcut" : " clean");
        if (e.witness) line << " weight " << e.witness->cover_weight << " at breakpoint " << e.witness->breakpoint;
        std::cerr << line.str() << "\n";
        if (level == LogLevel::Trace) {
            std::cerr << "[catzero]   cubes:";
            for (const auto& c : e.sequence->cubes) std::cerr << " " << c.ideal.count() << "/" << c.free.count();
            std::cerr << "\n";
            for (std::size_t i = 1; i + 1 < e.touring->points.size(); ++i) {
                std::cerr << "[catzero]   b" << i << " =";
                for (double v : e.touring->points[i].coords) std::cerr << " " << v;
                std::cerr << "\n";
            }
        }
    };
    return opt;
}

int cmd_validate(const Config& cfg, const Inputs& in) {
    const auto p = load_pip(in);
    const auto ideals = enumerate_consistent_ideals(p);
    const auto cubes = enumerate_cubes(p);
    const auto top = maximal_cubes(p);
    json j;
    j["valid"] = true;
    j["elements"] = p.size();
    j["consistent_ideals"] = ideals.size();
    j["cubes"] = cubes.size();
    j["cubes_by_dimension"] = cube_dimension_counts(cubes);
    j["max_cube_dimension"] = max_cube_dimension(p);
    j["euler_characteristic"] = euler_characteristic(p);
    j["maximal_cubes"] = json::array();
    for (const auto& c : top) j["maximal_cubes"].push_back(cube_to_json(p, c));
    std::ostringstream s;
    s << "valid: " << p.size() << " elements, " << ideals.size() << " vertices, " << cubes.size()
      << " cubes, max dimension " << max_cube_dimension(p) << "\nmaximal cubes:";
    for (const auto& c : top) s << " " << set_text(p, c.free);
    s << "\n";
    emit(cfg, j, s.str());
    return kOk;
}

int cmd_geodesic(const Config& cfg, const Inputs& in, bool length_only) {
    const auto p = load_pip(in);
    const auto [x, y] = load_endpoints(p, in);
    const auto path = geodesic(p, x, y, geodesic_options(cfg));
    std::ostringstream s;
    s.precision(17);
    s << "length " << path.length << (path.certified ? " (certified)" : " (uncertified)") << ", " << path.carrier.size()
      << " cubes, " << path.shortcuts.size() << " shortcuts, residual " << path.certificate.zero_tension_residual
      << "\n";
    if (path.budget_exhausted) s << "iteration budget exhausted\n";
    if (length_only) {
        json j{{"length", path.length}, {"certified", path.certified}};
        if (cfg.json_path.empty() && !cfg.quiet) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", path.length);
            std::cout << buf << "\n";
        } else {
            emit(cfg, j, s.str());
        }
    } else {
        if (!path.certified && !cfg.quiet) std::cerr << s.str();
        emit(cfg, path_to_json(p, path), s.str());
    }
    return path.certified ? kOk : kUncertified;
}

int cmd_oracle(const Config& cfg, const Inputs& in) {
    const auto p = load_pip(in);
    const auto [x, y] = load_endpoints(p, in);
    const auto main = geodesic(p, x, y, geodesic_options(cfg));
    std::size_t sequences = 0;
    const auto oracle = brute_force_geodesic(p, x, y, cfg.tol, kDefaultSequenceGuard, &sequences);
    const double dev = std::abs(main.length - oracle.length);
    json j{{"main_length", main.length},
           {"oracle_length", oracle.length},
           {"deviation", dev},
           {"sequences", sequences},
           {"certified", main.certified},
           {"oracle_cubes", json::array()}};
    for (const auto& c : oracle.carrier) j["oracle_cubes"].push_back(cube_to_json(p, c));
    std::ostringstream s;
    s.precision(17);
    s << "main " << main.length << ", brute force " << oracle.length << " over " << sequences
      << " sequences, deviation " << dev << "\n";
    emit(cfg, j, s.str());
    return main.certified ? kOk : kUncertified;
}

int cmd_embed(const Config& cfg, const Inputs& in) {
    const auto p = load_pip(in);
    const auto [x, y] = load_endpoints(p, in);
    const auto frame = interval_endpoints(p, x, y, cfg.tol);
    const auto emb = embed_interval(frame.q);
    std::ostringstream s;
    s << "interval of " << frame.q.size() << " elements, " << emb.vertices.size() << " vertices in Z^"
      << emb.dimension() << "\n";
    emit(cfg, embedding_to_json(frame.q, frame, emb), s.str());
    return kOk;
}

int cmd_normal_path(const Config& cfg, const Inputs& in) {
    const auto p = load_pip(in);
    json j;
    std::ostringstream s;
    if (!in.from.empty() || !in.to.empty()) {
        if (in.from.empty() || in.to.empty()) throw Error(Errc::ParseError, "--from and --to go together");
        const auto [x, y] = load_endpoints(p, in);
        const auto frame = interval_endpoints(p, x, y, cfg.tol);
        const auto seq = extended_normal_cube_path(frame.q, frame.x, frame.y);
        j["cubes"] = json::array();
        for (const auto& c : seq.cubes) {
            const auto lifted = frame.lift(c);
            j["cubes"].push_back(cube_to_json(p, lifted));
            s << cube_text(p, lifted) << "\n";
        }
    } else {
        j["ideals"] = json::array();
        for (const auto& ideal : normal_cube_path(p)) {
            j["ideals"].push_back(p.to_names(ideal.members()));
            s << set_text(p, ideal.members()) << "\n";
        }
    }
    emit(cfg, j, s.str());
    return kOk;
}

int cmd_state_complex(const Config& cfg, const Inputs& in) {
    const auto p = load_pip(in);
    const auto sys = pip_to_reconfigurable(p);
    const auto sc = state_complex(sys);
    std::ostringstream s;
    s << sys.moves.size() << " moves, " << sys.states.size() << " states, cubes by dimension:";
    for (auto c : sc.dimension_counts()) s << " " << c;
    s << "\n";
    emit(cfg, recsys_to_json(p, sys, sc), s.str());
    return kOk;
}

int cmd_halfspace(const Config& cfg, const Inputs& in) {
    if (in.pip.empty() == in.system.empty()) throw Error(Errc::ParseError, "give exactly one of --pip and --system");
    if (!in.pip.empty()) {
        const auto h = pip_to_halfspace(load_pip(in));
        emit(cfg, halfspace_to_json(h), std::to_string(h.size()) + " hyperplanes\n");
    } else {
        const auto p = halfspace_to_pip(halfspace_from_json(read_json_file(in.system)));
        emit(cfg, pip_to_json(p), std::to_string(p.size()) + " elements\n");
    }
    return kOk;
}

int cmd_reroot(const Config& cfg, const Inputs& in) {
    const auto p = load_pip(in);
    ElementSet v(p.size());
    std::stringstream ids(in.vertex);
    for (std::string id; std::getline(ids, id, ',');)
        if (!id.empty()) v.set(p.index(id));
    const auto r = reroot(p, v);
    json j{{"pip", pip_to_json(r.pip)}, {"flipped", p.to_names(r.flipped)}};
    emit(cfg, j, "rerooted at " + set_text(p, v) + "\n");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesics and structure of CAT(0) cube complexes given as posets with inconsistent pairs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Config cfg;
    Inputs in;
    app.add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::Range(0.0, 1e-2))->capture_default_str();
    app.add_option("--max-iter", cfg.max_iter, "Outer iteration budget (0 picks a default)");
    app.add_option("--seed", cfg.seed, "Seed for random initial breakpoints (0 uses the straight-line start)");
    app.add_option("--json", cfg.json_path, "Write JSON output to this path");
    app.add_flag("--quiet", cfg.quiet, "Suppress standard output");

    auto add = [&](const std::string& name, const std::string& help, bool endpoints, bool pip_required = true) {
        auto* sub = app.add_subcommand(name, help);
        auto* pip = sub->add_option("--pip", in.pip, "PIP JSON file");
        if (pip_required) pip->required();
        if (endpoints) {
            sub->add_option("--from", in.from, "Start point JSON file")->required();
            sub->add_option("--to", in.to, "End point JSON file")->required();
        }
        return sub;
    };
    auto* validate = add("validate", "Validate a PIP and report its complex", false);
    auto* geo = add("geodesic", "Certified geodesic between two points", true);
    auto* dist = add("distance", "Geodesic length only", true);
    auto* oracle = add("oracle", "Compare with exhaustive search over cube sequences", true);
    auto* embed = add("embed-interval", "Lattice embedding of the interval spanned by two points", true);
    auto* normal = add("normal-path", "Normal cube path of a poset, or extended path between two points", false);
    normal->add_option("--from", in.from, "Start point JSON file");
    normal->add_option("--to", in.to, "End point JSON file");
    auto* states = add("state-complex", "Reconfigurable system realizing the complex", false);
    auto* half = add("halfspace", "Convert between PIP and halfspace system", false, false);
    half->add_option("--system", in.system, "Halfspace system JSON file");
    auto* rer = add("reroot", "Reroot the complex at a vertex", false);
    rer->add_option("--vertex", in.vertex, "Comma-separated elements of the vertex ideal")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        log_level();
        if (*validate) return cmd_validate(cfg, in);
        if (*geo) return cmd_geodesic(cfg, in, false);
        if (*dist) return cmd_geodesic(cfg, in, true);
        if (*oracle) return cmd_oracle(cfg, in);
        if (*embed) return cmd_embed(cfg, in);
        if (*normal) return cmd_normal_path(cfg, in);
        if (*states) return cmd_state_complex(cfg, in);
        if (*half) return cmd_halfspace(cfg, in);
        if (*rer) return cmd_reroot(cfg, in);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::TooLarge ? kGuard : kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
