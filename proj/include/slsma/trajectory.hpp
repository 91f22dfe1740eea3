#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "slsma/terrain.hpp"

namespace slsma {

/// Fixed part of a multi-drone planning problem. Each drone may have its own
/// start and terminal; the built-in scenarios share one pair for all drones.
struct ScenarioGeometry {
    std::size_t drone_count = 5;
    std::size_t waypoints_per_path = 10;
    std::vector<Point3> starts;
    std::vector<Point3> terminals;
    Bounds3 bounds;

    static ScenarioGeometry shared(std::size_t drones, std::size_t waypoints, Point3 start,
                                   Point3 terminal, Bounds3 bounds = {}) {
        return {drones, waypoints, std::vector<Point3>(drones, start),
                std::vector<Point3>(drones, terminal), bounds};
    }

    /// Number of free coordinates: three per interior waypoint per drone.
    std::size_t dimension() const { return 3 * (waypoints_per_path - 2) * drone_count; }

    void validate() const {
        if (drone_count < 1) throw std::invalid_argument("geometry: need at least one drone");
        if (waypoints_per_path < 2) throw std::invalid_argument("geometry: need at least two waypoints");
        if (starts.size() != drone_count || terminals.size() != drone_count)
            throw std::invalid_argument("geometry: one start and one terminal per drone required");
        for (std::size_t m = 0; m < drone_count; ++m) {
            const auto& s = starts[m];
            const auto& t = terminals[m];
            if (s == t)
                throw std::invalid_argument("geometry: drone " + std::to_string(m + 1) +
                                            " has coincident start and terminal");
            for (double v : {s.x, s.y, s.z, t.x, t.y, t.z})
                if (!bounds.contains(v))
                    throw std::invalid_argument("geometry: start/terminal outside bounds");
        }
    }
};

using Waypoints = std::vector<Point3>;

/// Per-drone waypoint sequences; element m holds P_1 .. P_N of drone m.
using PathSet = std::vector<Waypoints>;

/// Reads drone m's interior waypoints as consecutive (x, y, z) triples from
/// segment m of the flat vector.
inline PathSet decode(std::span<const double> vector, const ScenarioGeometry& geom) {
    if (vector.size() != geom.dimension())
        throw std::invalid_argument("decode: vector has " + std::to_string(vector.size()) +
                                    " entries, geometry needs " + std::to_string(geom.dimension()));
    const std::size_t interior = geom.waypoints_per_path - 2;
    PathSet paths(geom.drone_count);
    std::size_t k = 0;
    for (std::size_t m = 0; m < geom.drone_count; ++m) {
        auto& wp = paths[m];
        wp.reserve(geom.waypoints_per_path);
        wp.push_back(geom.starts[m]);
        for (std::size_t i = 0; i < interior; ++i, k += 3)
            wp.push_back({vector[k], vector[k + 1], vector[k + 2]});
        wp.push_back(geom.terminals[m]);
    }
    return paths;
}

inline std::vector<double> encode(const PathSet& paths) {
    std::vector<double> out;
    for (const auto& wp : paths) {
        if (wp.size() < 2) throw std::invalid_argument("encode: path shorter than two waypoints");
        for (std::size_t i = 1; i + 1 < wp.size(); ++i) {
            out.push_back(wp[i].x);
            out.push_back(wp[i].y);
            out.push_back(wp[i].z);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// B-splines. "order" counts coefficients: order 4 is a cubic.

/// Cox-de Boor recursion for N_{l,order}(t). Spans are half-open [t_l, t_{l+1})
/// except that the last non-empty span also owns the final knot, so the basis
/// sums to one on the closed parameter domain. 0/0 terms are taken as 0.
inline double bspline_basis(std::size_t l, std::size_t order, double t, std::span<const double> knots) {
    if (order == 0 || l + order >= knots.size())
        throw std::out_of_range("bspline_basis: index/order outside knot vector");
    if (order == 1) {
        const double lo = knots[l], hi = knots[l + 1];
        if (lo <= t && t < hi) return 1.0;
        return (t == knots.back() && hi == knots.back() && lo < hi) ? 1.0 : 0.0;
    }
    double value = 0.0;
    const double left_den = knots[l + order - 1] - knots[l];
    if (left_den > 0.0) value += (t - knots[l]) / left_den * bspline_basis(l, order - 1, t, knots);
    const double right_den = knots[l + order] - knots[l + 1];
    if (right_den > 0.0)
        value += (knots[l + order] - t) / right_den * bspline_basis(l + 1, order - 1, t, knots);
    return value;
}

/// Clamped uniform knots on [0, 1]: each end repeated `order` times.
inline std::vector<double> clamped_uniform_knots(std::size_t control_points, std::size_t order) {
    if (order < 1 || control_points < order)
        throw std::invalid_argument("clamped_uniform_knots: need at least `order` control points");
    const std::size_t interior = control_points - order;
    std::vector<double> knots;
    knots.reserve(control_points + order);
    knots.insert(knots.end(), order, 0.0);
    for (std::size_t j = 1; j <= interior; ++j)
        knots.push_back(static_cast<double>(j) / static_cast<double>(interior + 1));
    knots.insert(knots.end(), order, 1.0);
    return knots;
}

inline constexpr std::size_t kCubicOrder = 4;
inline constexpr std::size_t kDefaultSplineSamples = 200;

/// Samples the clamped cubic B-spline with the waypoints as control points at
/// `samples` uniformly spaced parameters. Fewer than four control points drop
/// the degree to (count - 1).
inline std::vector<Point3> smooth_path(std::span<const Point3> control, std::size_t samples = kDefaultSplineSamples) {
    if (control.size() < 2) throw std::invalid_argument("smooth_path: need at least two control points");
    if (samples < 2) throw std::invalid_argument("smooth_path: need at least two samples");
    const std::size_t order = std::min(kCubicOrder, control.size());
    const auto knots = clamped_uniform_knots(control.size(), order);

    std::vector<Point3> out;
    out.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const double t = (s + 1 == samples) ? 1.0 : static_cast<double>(s) / static_cast<double>(samples - 1);
        Point3 p{};
        for (std::size_t i = 0; i < control.size(); ++i) {
            const double w = bspline_basis(i, order, t, knots);
            if (w == 0.0) continue;
            p.x += w * control[i].x;
            p.y += w * control[i].y;
            p.z += w * control[i].z;
        }
        out.push_back(p);
    }
    return out;
}

using SmoothTrajectory = std::vector<std::vector<Point3>>;

inline SmoothTrajectory smooth_paths(const PathSet& paths, std::size_t samples = kDefaultSplineSamples) {
    SmoothTrajectory out;
    out.reserve(paths.size());
    for (const auto& wp : paths) out.push_back(smooth_path(wp, samples));
    return out;
}

}  // namespace slsma
