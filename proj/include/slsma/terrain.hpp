#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slsma {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

inline double distance(const Point3& p, const Point3& q) {
    const double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Coefficients of the base relief
///   Z1 = sin(y + a) + b sin(x) + c cos(d r) + e cos(y) + f sin(f r) + g cos(y),
/// with r = sqrt(x^2 + y^2). The two cos(y) terms are both kept.
struct BaseTerrainCoeffs {
    double a = 3.0 * std::numbers::pi;
    double b = 1.0 / 10.0;
    double c = 9.0 / 10.0;
    double d = 1.0 / 2.0;
    double e = 1.0 / 2.0;
    double f = 1.0 / 2.0;
    double g = 3.0 / 10.0;

    static BaseTerrainCoeffs zero() { return {0, 0, 0, 0, 0, 0, 0}; }
};

/// Gaussian bump H * exp(-((x - cx)/sx)^2 - ((y - cy)/sy)^2).
struct Obstacle {
    double center_x = 0.0;
    double center_y = 0.0;
    double slope_x = 1.0;
    double slope_y = 1.0;
    double height = 1.0;
};

struct Bounds3 {
    double lower = 0.0;
    double upper = 1000.0;

    bool contains(double v) const { return v >= lower && v <= upper; }
};

struct TerrainModel {
    BaseTerrainCoeffs base;
    std::vector<Obstacle> obstacles;
    Bounds3 bounds;

    /// Throws std::invalid_argument if an obstacle is malformed or off the map.
    void validate() const {
        auto finite = [](double v) { return std::isfinite(v); };
        for (double v : {base.a, base.b, base.c, base.d, base.e, base.f, base.g})
            if (!finite(v)) throw std::invalid_argument("terrain: non-finite base coefficient");
        if (!(bounds.lower < bounds.upper))
            throw std::invalid_argument("terrain: bounds must satisfy lower < upper");
        for (std::size_t n = 0; n < obstacles.size(); ++n) {
            const auto& o = obstacles[n];
            const std::string tag = "terrain: obstacle " + std::to_string(n + 1);
            if (!(o.slope_x > 0.0) || !(o.slope_y > 0.0))
                throw std::invalid_argument(tag + " needs strictly positive slopes");
            if (!(o.height > 0.0)) throw std::invalid_argument(tag + " needs a positive height");
            if (!bounds.contains(o.center_x) || !bounds.contains(o.center_y))
                throw std::invalid_argument(tag + " center lies outside the horizontal bounds");
        }
    }
};

inline double base_height(double x, double y, const BaseTerrainCoeffs& k) {
    const double r = std::sqrt(y * y + x * x);
    return std::sin(y + k.a) + k.b * std::sin(x) + k.c * std::cos(k.d * r) + k.e * std::cos(y) +
           k.f * std::sin(k.f * r) + k.g * std::cos(y);
}

inline double obstacle_height(double x, double y, std::span<const Obstacle> obstacles) {
    double sum = 0.0;
    for (const auto& o : obstacles) {
        const double u = (x - o.center_x) / o.slope_x;
        const double v = (y - o.center_y) / o.slope_y;
        sum += o.height * std::exp(-u * u - v * v);
    }
    return sum;
}

inline double terrain_height(double x, double y, const TerrainModel& model) {
    return std::max(base_height(x, y, model.base), obstacle_height(x, y, model.obstacles));
}

/// A point touching the surface counts as obstructed.
inline bool point_in_obstruction(const Point3& p, const TerrainModel& model) {
    return p.z <= terrain_height(p.x, p.y, model);
}

struct GridSample {
    double x, y, z;
};

/// Row-major height samples on a regular grid covering the horizontal bounds.
inline std::vector<GridSample> sample_grid(const TerrainModel& model, std::size_t cells) {
    if (cells == 0) throw std::invalid_argument("terrain grid needs at least one cell");
    std::vector<GridSample> out;
    out.reserve((cells + 1) * (cells + 1));
    const double step = (model.bounds.upper - model.bounds.lower) / static_cast<double>(cells);
    for (std::size_t j = 0; j <= cells; ++j) {
        const double y = model.bounds.lower + step * static_cast<double>(j);
        for (std::size_t i = 0; i <= cells; ++i) {
            const double x = model.bounds.lower + step * static_cast<double>(i);
            out.push_back({x, y, terrain_height(x, y, model)});
        }
    }
    return out;
}

}  // namespace slsma
