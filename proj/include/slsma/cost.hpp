#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "slsma/terrain.hpp"
#include "slsma/trajectory.hpp"

namespace slsma {

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Penalty coefficients, limits and weights of the path-planning objective.
/// Defaults are the published settings. Angle limits are given in degrees.
struct CostConfig {
    double z_lb = 10.0;
    double z_ub = 950.0;
    double alpha_max_deg = 45.0;
    double beta_max_deg = 45.0;
    double d_min = 5.0;
    double q_height = 100.0;
    double q_yaw = 100.0;
    double q_pitch = 100.0;
    double q_collis_obs = 100.0;
    double q_collis_drone = 100.0;
    double w_distance = 100.0;
    double w_height = 1.0;
    double w_turn = 2.0;
    double w_collis_obs = 3.0;
    double w_collis_drone = 3.0;
    /// When true the terrain test also covers P_1 (the fixed launch point).
    /// Off by default: ground-level launch pads sit below the base relief and
    /// would otherwise carry an unavoidable penalty on every drone.
    bool check_launch_point = false;

    void validate() const {
        if (!(z_lb < z_ub)) throw std::invalid_argument("cost: z_lb must be below z_ub");
        if (!(alpha_max_deg > 0.0 && alpha_max_deg < 180.0) || !(beta_max_deg > 0.0 && beta_max_deg < 180.0))
            throw std::invalid_argument("cost: angle limits must lie in (0, 180) degrees");
        if (!(d_min > 0.0)) throw std::invalid_argument("cost: d_min must be positive");
        for (double v : {q_height, q_yaw, q_pitch, q_collis_obs, q_collis_drone, w_distance, w_height, w_turn,
                         w_collis_obs, w_collis_drone})
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("cost: coefficients and weights must be finite and >= 0");
    }

    double alpha_max_rad() const { return deg_to_rad(alpha_max_deg); }
    double beta_max_rad() const { return deg_to_rad(beta_max_deg); }
};

struct DroneCost {
    double distance = 0.0;
    double height = 0.0;
    double turning = 0.0;
    double obstacle_collision = 0.0;
    double drone_collision = 0.0;
};

struct CostBreakdown {
    std::vector<DroneCost> drones;
    double total = 0.0;
};

/// Path length over the straight start-terminal distance.
inline double distance_cost(std::span<const Point3> path) {
    if (path.size() < 2) throw std::invalid_argument("distance_cost: need at least two waypoints");
    const double baseline = distance(path.front(), path.back());
    if (!(baseline > 0.0)) throw std::invalid_argument("distance_cost: start and terminal coincide");
    double length = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) length += distance(path[i], path[i + 1]);
    return length / baseline;
}

inline double height_cost(std::span<const Point3> path, const CostConfig& cfg) {
    double cost = 0.0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (path[i].z < cfg.z_lb || path[i].z > cfg.z_ub) cost += cfg.q_height;
    return cost;
}

/// Horizontal turning angle at `cur`, radians in [0, pi]. A zero-length
/// horizontal leg gives 0.
inline double yaw_angle(const Point3& prev, const Point3& cur, const Point3& next) {
    const double ax = cur.x - prev.x, ay = cur.y - prev.y;
    const double bx = next.x - cur.x, by = next.y - cur.y;
    const double na = std::sqrt(ax * ax + ay * ay);
    const double nb = std::sqrt(bx * bx + by * by);
    if (na == 0.0 || nb == 0.0) return 0.0;
    const double c = std::clamp((ax * bx + ay * by) / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

/// Climb angle of the leg prev -> cur, radians in [0, pi/2]. A vertical leg is
/// pi/2; a zero-length leg is 0.
inline double pitch_angle(const Point3& prev, const Point3& cur) {
    const double dx = cur.x - prev.x, dy = cur.y - prev.y;
    return std::atan2(std::abs(cur.z - prev.z), std::sqrt(dx * dx + dy * dy));
}

inline double turning_cost(std::span<const Point3> path, const CostConfig& cfg) {
    const double alpha_max = cfg.alpha_max_rad();
    const double beta_max = cfg.beta_max_rad();
    double cost = 0.0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (yaw_angle(path[i - 1], path[i], path[i + 1]) > alpha_max) cost += cfg.q_yaw;
        if (pitch_angle(path[i - 1], path[i]) > beta_max) cost += cfg.q_pitch;
    }
    return cost;
}

/// Waypoints P_1 .. P_{N-1} (P_2 .. P_{N-1} unless check_launch_point) that
/// sit on or under the terrain surface.
inline double obstacle_collision_cost(std::span<const Point3> path, const TerrainModel& model, const CostConfig& cfg) {
    double cost = 0.0;
    const std::size_t first = cfg.check_launch_point ? 0 : 1;
    for (std::size_t i = first; i + 1 < path.size(); ++i)
        if (point_in_obstruction(path[i], model)) cost += cfg.q_collis_obs;
    return cost;
}

/// Cost for drone m against every other drone at the same interior index.
/// A pair is penalised when its separation is below d_min.
inline double drone_collision_cost(const PathSet& paths, std::size_t m, const CostConfig& cfg) {
    double cost = 0.0;
    const auto& own = paths[m];
    for (std::size_t i = 1; i + 1 < own.size(); ++i) {
        for (std::size_t n = 0; n < paths.size(); ++n) {
            if (n == m || i + 1 >= paths[n].size()) continue;
            if (distance(own[i], paths[n][i]) < cfg.d_min) cost += cfg.q_collis_drone;
        }
    }
    return cost;
}

/// Sum of drone_collision_cost over all drones.
inline double drone_collision_cost(const PathSet& paths, const CostConfig& cfg) {
    double cost = 0.0;
    for (std::size_t m = 0; m < paths.size(); ++m) cost += drone_collision_cost(paths, m, cfg);
    return cost;
}

inline double weighted(const DroneCost& c, const CostConfig& cfg) {
    return cfg.w_distance * c.distance + cfg.w_height * c.height + cfg.w_turn * c.turning +
           cfg.w_collis_obs * c.obstacle_collision + cfg.w_collis_drone * c.drone_collision;
}

inline CostBreakdown evaluate_paths(const PathSet& paths, const TerrainModel& model, const CostConfig& cfg) {
    CostBreakdown out;
    out.drones.reserve(paths.size());
    for (std::size_t m = 0; m < paths.size(); ++m) {
        DroneCost c;
        c.distance = distance_cost(paths[m]);
        c.height = height_cost(paths[m], cfg);
        c.turning = turning_cost(paths[m], cfg);
        c.obstacle_collision = obstacle_collision_cost(paths[m], model, cfg);
        c.drone_collision = drone_collision_cost(paths, m, cfg);
        out.total += weighted(c, cfg);
        out.drones.push_back(c);
    }
    return out;
}

inline CostBreakdown total_cost(std::span<const double> vector, const ScenarioGeometry& geom,
                                const TerrainModel& model, const CostConfig& cfg) {
    return evaluate_paths(decode(vector, geom), model, cfg);
}

/// Counts spline samples that sit on or under the terrain, per drone. Used as
/// an after-the-fact audit of smoothed trajectories; the objective itself
/// works on raw waypoints.
inline std::vector<std::size_t> audit_collisions(const SmoothTrajectory& traj, const TerrainModel& model) {
    std::vector<std::size_t> hits;
    hits.reserve(traj.size());
    for (const auto& samples : traj) {
        std::size_t n = 0;
        // Endpoints are launch/landing pads on the ground.
        for (std::size_t s = 1; s + 1 < samples.size(); ++s)
            if (point_in_obstruction(samples[s], model)) ++n;
        hits.push_back(n);
    }
    return hits;
}

}  // namespace slsma
