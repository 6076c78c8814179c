#ifndef CATZERO_IO_HPP
#define CATZERO_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catzero/complex.hpp"
#include "catzero/error.hpp"
#include "catzero/geodesic.hpp"
#include "catzero/halfspace.hpp"
#include "catzero/interval.hpp"
#include "catzero/pip.hpp"
#include "catzero/point.hpp"
#include "catzero/recsys.hpp"

namespace catzero {

using json = nlohmann::json;

namespace detail {

inline void write_json(std::string& out, const json& j, int indent, int depth) {
    const std::string pad = indent >= 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close = indent >= 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* colon = indent >= 0 ? ": " : ":";
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += pad;
            out += json(it.key()).dump();
            out += colon;
            write_json(out, it.value(), indent, depth + 1);
        }
        out += close + '}';
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Short scalar arrays stay on one line.
        bool flat = true;
        for (const auto& v : j) flat = flat && !v.is_structured();
        out += '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += flat ? ", " : ",";
            first = false;
            if (!flat) out += pad;
            write_json(out, v, indent, depth + 1);
        }
        if (!flat) out += close;
        out += ']';
        return;
    }
    case json::value_t::number_float: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
        std::string s = buf;
        if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
        out += s;
        return;
    }
    default: out += j.dump(); return;
    }
}

} // namespace detail

/// Serializes with every real printed to 17 significant digits.
inline std::string to_text(const json& j, int indent = 2) {
    std::string out;
    detail::write_json(out, j, indent, 0);
    return out;
}

inline json parse_json_text(const std::string& text, const std::string& what = "input") {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, what + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

namespace detail {

inline std::string element_id(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(Errc::ParseError, "element identifiers must be strings");
}

inline std::vector<ElementPair> pair_list(const json& j, const char* key) {
    std::vector<ElementPair> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw Error(Errc::ParseError, std::string("'") + key + "' must be an array");
    for (const auto& pr : j[key]) {
        if (!pr.is_array() || pr.size() != 2)
            throw Error(Errc::ParseError, std::string("entries of '") + key + "' must be pairs");
        out.emplace_back(element_id(pr[0]), element_id(pr[1]));
    }
    return out;
}

inline json name_list(const Pip& p, const ElementSet& s) { return json(p.to_names(s)); }

inline ElementSet name_set(const Pip& p, const json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of element identifiers");
    ElementSet s(p.size());
    for (const auto& v : j) s.set(p.index(element_id(v)));
    return s;
}

} // namespace detail

inline Pip pip_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw Error(Errc::ParseError, "PIP JSON needs an 'elements' array");
    RawPip raw;
    for (const auto& e : j["elements"]) raw.elements.push_back(detail::element_id(e));
    raw.covers = detail::pair_list(j, "covers");
    raw.inconsistent = detail::pair_list(j, "inconsistent");
    return Pip::validate(raw);
}

/// Canonical form: sorted elements, Hasse covers, minimal inconsistent pairs.
inline json pip_to_json(const Pip& p) {
    const auto raw = p.to_raw();
    json j;
    j["elements"] = raw.elements;
    j["covers"] = json::array();
    for (const auto& [a, b] : raw.covers) j["covers"].push_back({a, b});
    j["inconsistent"] = json::array();
    for (const auto& [a, b] : raw.inconsistent) j["inconsistent"].push_back({a, b});
    return j;
}

inline Point point_from_json(const Pip& p, const json& j) {
    if (!j.is_object() || !j.contains("coords") || !j["coords"].is_object())
        throw Error(Errc::ParseError, "point JSON needs a 'coords' object");
    Point x(p.size());
    for (auto it = j["coords"].begin(); it != j["coords"].end(); ++it) {
        if (!it.value().is_number()) throw Error(Errc::ParseError, "coordinate '" + it.key() + "' is not a number");
        x[p.index(it.key())] = it.value().get<double>();
    }
    return x;
}

inline json point_to_json(const Pip& p, const Point& x) {
    json coords = json::object();
    for (std::size_t i = 0; i < p.size(); ++i) coords[p.name(i)] = x[i];
    return json{{"coords", coords}};
}

inline Cube cube_from_json(const Pip& p, const json& j) {
    if (!j.is_object() || !j.contains("ideal")) throw Error(Errc::ParseError, "cube JSON needs an 'ideal' array");
    auto ideal = detail::name_set(p, j["ideal"]);
    auto free = j.contains("free") ? detail::name_set(p, j["free"]) : ElementSet(p.size());
    return make_cube(p, std::move(ideal), std::move(free));
}

inline json cube_to_json(const Pip& p, const Cube& c) {
    return json{{"ideal", detail::name_list(p, c.ideal)}, {"free", detail::name_list(p, c.free)}};
}

inline json path_to_json(const Pip& p, const GeodesicPath& path) {
    json j;
    j["length"] = path.length;
    j["breakpoints"] = json::array();
    for (const auto& b : path.breakpoints) j["breakpoints"].push_back(point_to_json(p, b));
    j["cubes"] = json::array();
    for (const auto& c : path.carrier) j["cubes"].push_back(cube_to_json(p, c));
    j["certified"] = path.certified;
    j["zero_tension_residual"] = path.certificate.zero_tension_residual;
    j["shortcut_clean"] = path.certificate.shortcut_clean;
    j["iterations"] = path.iterations;
    j["shortcuts"] = path.shortcuts.size();
    j["trace"] = json::array();
    for (const auto& t : path.trace) j["trace"].push_back(t.length);
    return j;
}

inline HalfspaceSystem halfspace_from_json(const json& j) {
    if (!j.is_object() || !j.contains("hyperplanes") || !j["hyperplanes"].is_array())
        throw Error(Errc::ParseError, "halfspace JSON needs a 'hyperplanes' array");
    std::vector<std::string> names;
    for (const auto& h : j["hyperplanes"]) names.push_back(detail::element_id(h));
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto literal = [&](const std::string& s) {
        if (s.size() < 2 || (s.back() != '+' && s.back() != '-'))
            throw Error(Errc::ParseError, "literal '" + s + "' must end in + or -");
        const auto id = s.substr(0, s.size() - 1);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
        if (it == sorted.end() || *it != id) throw Error(Errc::UnknownElement, "hyperplane '" + id + "' is unknown");
        return Literal{static_cast<std::size_t>(it - sorted.begin()), s.back() == '+'};
    };
    std::vector<std::pair<Literal, Literal>> rel;
    for (const auto& [a, b] : detail::pair_list(j, "relations")) rel.emplace_back(literal(a), literal(b));
    return HalfspaceSystem::build(std::move(names), rel);
}

/// Hasse covers of the literal order.
inline json halfspace_to_json(const HalfspaceSystem& h) {
    json j;
    j["hyperplanes"] = h.names();
    j["relations"] = json::array();
    for (const auto& [a, b] : h.cover_relations()) j["relations"].push_back({h.literal_name(a), h.literal_name(b)});
    return j;
}

inline json embedding_to_json(const Pip& q, const IntervalFrame& frame, const LatticeEmbedding& emb) {
    json j;
    j["interval"] = pip_to_json(q);
    j["v"] = detail::name_list(frame.original, frame.v);
    j["w"] = detail::name_list(frame.original, frame.w);
    j["dimension"] = emb.dimension();
    j["chains"] = json::array();
    for (const auto& c : emb.chains) {
        json chain = json::array();
        for (auto e : c) chain.push_back(q.name(e));
        j["chains"].push_back(chain);
    }
    j["vertices"] = json::array();
    for (const auto& [ideal, coords] : emb.vertices)
        j["vertices"].push_back({{"ideal", detail::name_list(q, ideal)}, {"lattice", coords}});
    return j;
}

inline json recsys_to_json(const Pip& p, const ReconfigurableSystem& sys, const StateComplex& sc) {
    json j;
    j["graph"]["vertices"] = sys.vertices;
    j["graph"]["edges"] = json::array();
    for (auto [a, b] : sys.edges) j["graph"]["edges"].push_back({sys.vertices[a], sys.vertices[b]});
    j["alphabet"] = {0, 1};
    j["moves"] = json::array();
    for (const auto& m : sys.moves) {
        json ctx = json::object();
        (m.support - m.trace).for_each([&](std::size_t v) { ctx[sys.vertices[v]] = m.context.test(v) ? 1 : 0; });
        j["moves"].push_back({{"name", m.name},
                              {"support", detail::name_list(p, m.support)},
                              {"trace", detail::name_list(p, m.trace)},
                              {"context", ctx}});
    }
    j["state_complex"]["vertices"] = sc.vertex_count;
    j["state_complex"]["cubes_by_dimension"] = sc.dimension_counts();
    j["state_complex"]["states"] = json::array();
    for (const auto& s : sys.states) j["state_complex"]["states"].push_back(detail::name_list(p, s));
    return j;
}

} // namespace catzero

#endif // CATZERO_IO_HPP
