#pragma once

#include <string>

#include "catzero/io.hpp"

#ifndef CATZERO_DATA_DIR
#error "CATZERO_DATA_DIR must point at data/fixtures"
#endif

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(CATZERO_DATA_DIR) + "/" + name + ".json"; }

/// Loads data/fixtures/<name>.json as a Pip.
inline catzero::Pip fixture(const std::string& name) { return catzero::pip_from_json(catzero::read_json_file(fixture_path(name))); }

inline catzero::Point fixture_point(const catzero::Pip& p, const std::string& name) {
    return catzero::point_from_json(p, catzero::read_json_file(fixture_path(name)));
}

/// Point from coordinates listed in element order.
inline catzero::Point pt(std::initializer_list<double> c) { return catzero::Point(std::vector<double>(c)); }

inline catzero::ElementSet set_of(const catzero::Pip& p, std::initializer_list<const char*> ids) {
    catzero::ElementSet s(p.size());
    for (auto id : ids) s.set(p.index(id));
    return s;
}

inline catzero::Cube cube_of(const catzero::Pip& p, std::initializer_list<const char*> ideal,
                             std::initializer_list<const char*> free) {
    return catzero::make_cube(p, set_of(p, ideal), set_of(p, free));
}

} // namespace testing_support
