#ifndef CATZERO_TOURING_HPP
#define CATZERO_TOURING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "catzero/point.hpp"

namespace catzero {

/// Axis-aligned feasible box for one breakpoint. lo == hi pins a coordinate.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t size() const { return lo.size(); }
    Point project(Point p) const {
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::clamp(p[j], lo[j], hi[j]);
        return p;
    }
    bool contains(const Point& p, double tol) const {
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] < lo[j] - tol || p[j] > hi[j] + tol) return false;
        return true;
    }
};

/// Shortest polygonal path start -> b_1 -> ... -> b_{k-1} -> end with b_i in boxes[i-1].
struct TouringProblem {
    Point start;
    Point end;
    std::vector<Box> boxes;
};

struct TouringOptions {
    double tol = 1e-8;
    std::size_t max_steps = 100000;
    double eps_start = 1e-2;
    double eps_end = 1e-12;
    double eps_factor = 10.0;
};

enum class TouringStatus { Converged, ToleranceNotReached };

struct TouringResult {
    std::vector<Point> points; // start, breakpoints..., end
    double length = 0.0;
    double residual = 0.0;     // projected-gradient norm at the last stage
    TouringStatus status = TouringStatus::Converged;
    std::size_t steps = 0;

    bool converged() const { return status == TouringStatus::Converged; }
};

inline double path_length(const std::vector<Point>& points) {
    double total = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) total += distance(points[i - 1], points[i]);
    return total;
}

namespace detail {

/// Variables are the non-pinned box coordinates, breakpoint-major.
class TouringObjective {
public:
    explicit TouringObjective(const TouringProblem& prob) : prob_(prob) {
        const std::size_t k = prob.boxes.size();
        dim_ = prob.start.size();
        var_of_.assign(k, std::vector<int>(dim_, -1));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (prob.boxes[i].hi[j] > prob.boxes[i].lo[j]) {
                    var_of_[i][j] = static_cast<int>(lo_.size());
                    lo_.push_back(prob.boxes[i].lo[j]);
                    hi_.push_back(prob.boxes[i].hi[j]);
                }
    }

    std::size_t size() const { return lo_.size(); }
    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }

    Eigen::VectorXd pack(const std::vector<Point>& interior) const {
        Eigen::VectorXd z(size());
        for (std::size_t i = 0; i < var_of_.size(); ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (var_of_[i][j] >= 0) z[var_of_[i][j]] = std::clamp(interior[i][j], lo_[var_of_[i][j]], hi_[var_of_[i][j]]);
        return z;
    }

    /// start, breakpoints..., end
    std::vector<Point> unpack(const Eigen::VectorXd& z) const {
        std::vector<Point> pts;
        pts.reserve(var_of_.size() + 2);
        pts.push_back(prob_.start);
        for (std::size_t i = 0; i < var_of_.size(); ++i) {
            Point p(dim_);
            for (std::size_t j = 0; j < dim_; ++j)
                p[j] = var_of_[i][j] >= 0 ? z[var_of_[i][j]] : prob_.boxes[i].lo[j];
            pts.push_back(std::move(p));
        }
        pts.push_back(prob_.end);
        return pts;
    }

    double value(const Eigen::VectorXd& z, double eps) const {
        const auto pts = unpack(z);
        double f = 0.0;
        for (std::size_t l = 1; l < pts.size(); ++l) {
            double s = eps * eps;
            for (std::size_t j = 0; j < dim_; ++j) {
                const double d = pts[l][j] - pts[l - 1][j];
                s += d * d;
            }
            f += std::sqrt(s);
        }
        return f;
    }

    /// Smoothed objective sum sqrt(|d|^2 + eps^2) with gradient and Hessian.
    double evaluate(const Eigen::VectorXd& z, double eps, Eigen::VectorXd& g, Eigen::MatrixXd& h) const {
        const auto pts = unpack(z);
        g.setZero(size());
        h.setZero(size(), size());
        double f = 0.0;
        std::vector<double> d(dim_);
        for (std::size_t l = 1; l < pts.size(); ++l) {
            double s2 = eps * eps;
            for (std::size_t j = 0; j < dim_; ++j) {
                d[j] = pts[l][j] - pts[l - 1][j];
                s2 += d[j] * d[j];
            }
            const double s = std::sqrt(s2);
            f += s;
            // Breakpoint l-1 sits at var row l-2 (row -1 is the start); l at row l-1.
            const int head = static_cast<int>(l) - 1;
            const int tail = static_cast<int>(l) - 2;
            auto var = [&](int row, std::size_t j) {
                if (row < 0 || row >= static_cast<int>(var_of_.size())) return -1;
                return var_of_[row][j];
            };
            for (std::size_t j = 0; j < dim_; ++j) {
                const int vh = var(head, j);
                const int vt = var(tail, j);
                if (vh >= 0) g[vh] += d[j] / s;
                if (vt >= 0) g[vt] -= d[j] / s;
                if (vh < 0 && vt < 0) continue;
                for (std::size_t jj = 0; jj < dim_; ++jj) {
                    const int wh = var(head, jj);
                    const int wt = var(tail, jj);
                    if (wh < 0 && wt < 0) continue;
                    const double b = ((j == jj ? 1.0 : 0.0) - d[j] * d[jj] / s2) / s;
                    if (vh >= 0 && wh >= 0) h(vh, wh) += b;
                    if (vt >= 0 && wt >= 0) h(vt, wt) += b;
                    if (vh >= 0 && wt >= 0) h(vh, wt) -= b;
                    if (vt >= 0 && wh >= 0) h(vt, wh) -= b;
                }
            }
        }
        return f;
    }

    Eigen::VectorXd project(Eigen::VectorXd z) const {
        for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = std::clamp(z[i], lo_[i], hi_[i]);
        return z;
    }

    double projected_gradient_norm(const Eigen::VectorXd& z, const Eigen::VectorXd& g) const {
        return (z - project(z - g)).norm();
    }

private:
    const TouringProblem& prob_;
    std::size_t dim_ = 0;
    std::vector<std::vector<int>> var_of_;
    std::vector<double> lo_;
    std::vector<double> hi_;
};

} // namespace detail

/// Minimizes the total length by projected Newton steps on the smoothed
/// objective, tightening the smoothing from eps_start to eps_end.
/// `initial` (interior breakpoints only) defaults to the straight-line guess.
inline TouringResult solve_touring(const TouringProblem& prob, const TouringOptions& opt = {},
                                   const std::vector<Point>* initial = nullptr) {
    detail::TouringObjective obj(prob);
    const std::size_t k = prob.boxes.size();

    std::vector<Point> guess;
    if (initial) {
        guess = *initial;
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            const double t = static_cast<double>(i + 1) / static_cast<double>(k + 1);
            Point p(prob.start.size());
            for (std::size_t j = 0; j < p.size(); ++j) p[j] = prob.start[j] + t * (prob.end[j] - prob.start[j]);
            guess.push_back(prob.boxes[i].project(std::move(p)));
        }
    }

    TouringResult result;
    Eigen::VectorXd z = obj.pack(guess);
    const auto n = static_cast<Eigen::Index>(obj.size());
    if (n == 0) {
        result.points = obj.unpack(z);
        result.length = path_length(result.points);
        return result;
    }

    Eigen::VectorXd g(n);
    Eigen::MatrixXd h(n, n);
    bool capped = false;
    double pg = 0.0;
    for (double eps = opt.eps_start; eps >= opt.eps_end * 0.999 && !capped; eps /= opt.eps_factor) {
        while (true) {
            const double f = obj.evaluate(z, eps, g, h);
            pg = obj.projected_gradient_norm(z, g);
            if (pg <= opt.tol * (1.0 + f)) break;
            if (result.steps >= opt.max_steps) {
                capped = true;
                break;
            }
            ++result.steps;

            // Bound-active variables whose gradient pushes outward stay put.
            const double margin = std::min(1e-3, pg);
            std::vector<Eigen::Index> free_vars;
            std::vector<char> is_free(static_cast<std::size_t>(n), 0);
            for (Eigen::Index i = 0; i < n; ++i) {
                const bool at_lo = z[i] <= obj.lo()[i] + margin && g[i] > 0.0;
                const bool at_hi = z[i] >= obj.hi()[i] - margin && g[i] < 0.0;
                if (!at_lo && !at_hi) {
                    free_vars.push_back(i);
                    is_free[i] = 1;
                }
            }

            Eigen::VectorXd dir = Eigen::VectorXd::Zero(n);
            for (Eigen::Index i = 0; i < n; ++i)
                if (!is_free[i]) dir[i] = -g[i] / std::max(1.0, h(i, i));
            if (!free_vars.empty()) {
                const auto m = static_cast<Eigen::Index>(free_vars.size());
                Eigen::MatrixXd hf(m, m);
                Eigen::VectorXd gf(m);
                double diag = 0.0;
                for (Eigen::Index a = 0; a < m; ++a) {
                    gf[a] = g[free_vars[a]];
                    for (Eigen::Index b = 0; b < m; ++b) hf(a, b) = h(free_vars[a], free_vars[b]);
                    diag = std::max(diag, std::abs(hf(a, a)));
                }
                double lambda = 1e-14 * (1.0 + diag);
                for (int attempt = 0; attempt < 12; ++attempt, lambda *= 100.0) {
                    Eigen::MatrixXd reg = hf;
                    reg.diagonal().array() += lambda;
                    Eigen::LLT<Eigen::MatrixXd> llt(reg);
                    if (llt.info() != Eigen::Success) continue;
                    const Eigen::VectorXd step = llt.solve(-gf);
                    if (!step.allFinite()) continue;
                    for (Eigen::Index a = 0; a < m; ++a) dir[free_vars[a]] = step[a];
                    break;
                }
            }

            auto armijo = [&](const Eigen::VectorXd& d) -> bool {
                double alpha = 1.0;
                for (int t = 0; t < 60; ++t, alpha *= 0.5) {
                    const Eigen::VectorXd cand = obj.project(z + alpha * d);
                    const double fc = obj.value(cand, eps);
                    if (fc <= f + 1e-4 * g.dot(cand - z) && fc < f) {
                        z = cand;
                        return true;
                    }
                }
                return false;
            };
            if (armijo(dir)) continue;
            if (armijo(-g)) continue;
            break; // no representable decrease left at this smoothing level
        }
    }

    result.points = obj.unpack(z);
    result.length = path_length(result.points);
    result.residual = pg;
    result.status = capped ? TouringStatus::ToleranceNotReached : TouringStatus::Converged;
    return result;
}

} // namespace catzero

#endif // CATZERO_TOURING_HPP
