#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "slsma/cost.hpp"
#include "slsma/terrain.hpp"
#include "slsma/trajectory.hpp"

namespace slsma {

using json = nlohmann::json;

/// Everything that defines one path-planning problem instance.
struct ScenarioSpec {
    std::string name;
    TerrainModel terrain;
    ScenarioGeometry geometry;
    CostConfig cost;

    void validate() const {
        terrain.validate();
        geometry.validate();
        cost.validate();
    }
};

namespace detail {

inline ScenarioSpec builtin(std::string name, std::vector<Obstacle> obstacles) {
    ScenarioSpec s;
    s.name = std::move(name);
    s.terrain.obstacles = std::move(obstacles);
    s.geometry = ScenarioGeometry::shared(5, 10, {0.0, 0.0, 0.0}, {1000.0, 1000.0, 0.0});
    return s;
}

}  // namespace detail

/// Built-in scenarios "I", "II" and "III": five drones, ten waypoints, launch
/// at (0, 0, 0), landing at (1000, 1000, 0), default cost settings.
inline ScenarioSpec builtin_scenario(const std::string& name) {
    // (center x, center y, slope x, slope y, height)
    if (name == "I")
        return detail::builtin("I", {{250, 200, 110, 105, 505}, {420, 800, 90, 140, 745}, {720, 340, 150, 140, 605}});
    if (name == "II")
        return detail::builtin("II", {{200, 330, 100, 110, 405},
                                      {430, 700, 90, 140, 785},
                                      {200, 730, 110, 120, 390},
                                      {710, 800, 90, 140, 505},
                                      {790, 200, 90, 80, 325},
                                      {570, 210, 100, 110, 545}});
    if (name == "III")
        return detail::builtin("III", {{150, 660, 68, 65, 385},
                                       {460, 270, 110, 95, 535},
                                       {740, 80, 80, 50, 425},
                                       {190, 740, 70, 70, 265},
                                       {390, 690, 80, 80, 495},
                                       {710, 710, 90, 160, 705},
                                       {940, 340, 45, 76, 395},
                                       {390, 890, 50, 50, 295},
                                       {840, 890, 60, 70, 495},
                                       {290, 110, 50, 60, 355}});
    throw std::invalid_argument("unknown built-in scenario '" + name + "' (expected I, II or III)");
}

inline const std::vector<std::string>& builtin_scenario_names() {
    static const std::vector<std::string> names{"I", "II", "III"};
    return names;
}

// ---------------------------------------------------------------------------
// JSON

inline constexpr const char* kScenarioSchema = "slsma.scenario/1";

inline json to_json(const Point3& p) { return json::array({p.x, p.y, p.z}); }

inline Point3 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element point array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline json to_json(const TerrainModel& t) {
    json obstacles = json::array();
    for (const auto& o : t.obstacles)
        obstacles.push_back({{"center", {o.center_x, o.center_y}}, {"slope", {o.slope_x, o.slope_y}}, {"height", o.height}});
    const auto& b = t.base;
    return {{"base", {{"a", b.a}, {"b", b.b}, {"c", b.c}, {"d", b.d}, {"e", b.e}, {"f", b.f}, {"g", b.g}}},
            {"bounds", {t.bounds.lower, t.bounds.upper}},
            {"obstacles", obstacles}};
}

inline TerrainModel terrain_from_json(const json& j) {
    TerrainModel t;
    if (j.contains("base")) {
        const auto& b = j.at("base");
        t.base.a = b.value("a", t.base.a);
        t.base.b = b.value("b", t.base.b);
        t.base.c = b.value("c", t.base.c);
        t.base.d = b.value("d", t.base.d);
        t.base.e = b.value("e", t.base.e);
        t.base.f = b.value("f", t.base.f);
        t.base.g = b.value("g", t.base.g);
    }
    if (j.contains("bounds")) t.bounds = {j.at("bounds").at(0).get<double>(), j.at("bounds").at(1).get<double>()};
    for (const auto& o : j.value("obstacles", json::array()))
        t.obstacles.push_back({o.at("center").at(0).get<double>(), o.at("center").at(1).get<double>(),
                               o.at("slope").at(0).get<double>(), o.at("slope").at(1).get<double>(),
                               o.at("height").get<double>()});
    return t;
}

inline json to_json(const CostConfig& c) {
    return {{"z_lb", c.z_lb},
            {"z_ub", c.z_ub},
            {"alpha_max_deg", c.alpha_max_deg},
            {"beta_max_deg", c.beta_max_deg},
            {"d_min", c.d_min},
            {"q_height", c.q_height},
            {"q_yaw", c.q_yaw},
            {"q_pitch", c.q_pitch},
            {"q_collis_obs", c.q_collis_obs},
            {"q_collis_drone", c.q_collis_drone},
            {"weights", {c.w_distance, c.w_height, c.w_turn, c.w_collis_obs, c.w_collis_drone}},
            {"check_launch_point", c.check_launch_point}};
}

inline CostConfig cost_from_json(const json& j) {
    CostConfig c;
    c.z_lb = j.value("z_lb", c.z_lb);
    c.z_ub = j.value("z_ub", c.z_ub);
    c.alpha_max_deg = j.value("alpha_max_deg", c.alpha_max_deg);
    c.beta_max_deg = j.value("beta_max_deg", c.beta_max_deg);
    c.d_min = j.value("d_min", c.d_min);
    c.q_height = j.value("q_height", c.q_height);
    c.q_yaw = j.value("q_yaw", c.q_yaw);
    c.q_pitch = j.value("q_pitch", c.q_pitch);
    c.q_collis_obs = j.value("q_collis_obs", c.q_collis_obs);
    c.q_collis_drone = j.value("q_collis_drone", c.q_collis_drone);
    if (j.contains("weights")) {
        const auto& w = j.at("weights");
        if (!w.is_array() || w.size() != 5) throw std::invalid_argument("cost.weights must hold five numbers");
        c.w_distance = w[0].get<double>();
        c.w_height = w[1].get<double>();
        c.w_turn = w[2].get<double>();
        c.w_collis_obs = w[3].get<double>();
        c.w_collis_drone = w[4].get<double>();
    }
    c.check_launch_point = j.value("check_launch_point", c.check_launch_point);
    return c;
}

inline json to_json(const ScenarioGeometry& g) {
    json starts = json::array(), terminals = json::array();
    for (const auto& p : g.starts) starts.push_back(to_json(p));
    for (const auto& p : g.terminals) terminals.push_back(to_json(p));
    return {{"drones", g.drone_count},
            {"waypoints", g.waypoints_per_path},
            {"starts", starts},
            {"terminals", terminals},
            {"bounds", {g.bounds.lower, g.bounds.upper}}};
}

/// Accepts either per-drone "starts"/"terminals" arrays or a shared
/// "start"/"terminal" point.
inline ScenarioGeometry geometry_from_json(const json& j) {
    ScenarioGeometry g;
    g.drone_count = j.value("drones", std::size_t{5});
    g.waypoints_per_path = j.value("waypoints", std::size_t{10});
    if (j.contains("bounds")) g.bounds = {j.at("bounds").at(0).get<double>(), j.at("bounds").at(1).get<double>()};
    auto read_points = [&](const char* plural, const char* single) {
        std::vector<Point3> pts;
        if (j.contains(plural)) {
            for (const auto& p : j.at(plural)) pts.push_back(point_from_json(p));
        } else if (j.contains(single)) {
            pts.assign(g.drone_count, point_from_json(j.at(single)));
        } else {
            throw std::invalid_argument(std::string("geometry needs '") + plural + "' or '" + single + "'");
        }
        return pts;
    };
    g.starts = read_points("starts", "start");
    g.terminals = read_points("terminals", "terminal");
    return g;
}

inline json to_json(const ScenarioSpec& s) {
    return {{"schema", kScenarioSchema},
            {"name", s.name},
            {"terrain", to_json(s.terrain)},
            {"geometry", to_json(s.geometry)},
            {"cost", to_json(s.cost)}};
}

inline ScenarioSpec scenario_from_json(const json& j) {
    if (j.is_string()) return builtin_scenario(j.get<std::string>());
    if (j.contains("schema") && j.at("schema") != kScenarioSchema)
        throw std::invalid_argument("unsupported scenario schema " + j.at("schema").dump());
    ScenarioSpec s;
    s.name = j.value("name", std::string("custom"));
    s.terrain = terrain_from_json(j.at("terrain"));
    s.geometry = geometry_from_json(j.at("geometry"));
    s.cost = cost_from_json(j.value("cost", json::object()));
    s.validate();
    return s;
}

inline json to_json(const CostBreakdown& b) {
    json drones = json::array();
    for (const auto& d : b.drones)
        drones.push_back({{"distance", d.distance},
                          {"height", d.height},
                          {"turning", d.turning},
                          {"obstacle_collision", d.obstacle_collision},
                          {"drone_collision", d.drone_collision}});
    return {{"drones", drones}, {"total", b.total}};
}

inline CostBreakdown breakdown_from_json(const json& j) {
    CostBreakdown b;
    for (const auto& d : j.at("drones"))
        b.drones.push_back({d.at("distance").get<double>(), d.at("height").get<double>(), d.at("turning").get<double>(),
                            d.at("obstacle_collision").get<double>(), d.at("drone_collision").get<double>()});
    b.total = j.at("total").get<double>();
    return b;
}

}  // namespace slsma
