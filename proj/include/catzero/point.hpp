#ifndef CATZERO_POINT_HPP
#define CATZERO_POINT_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace catzero {

/// Coordinates in the standard embedding, indexed like the owning Pip.
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::size_t n, double value = 0.0) : coords(n, value) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t size() const noexcept { return coords.size(); }
    double& operator[](std::size_t i) { return coords[i]; }
    double operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double max_abs_diff(const Point& a, const Point& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace catzero

#endif // CATZERO_POINT_HPP
