#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "slsma/runner.hpp"
#include "slsma/scenario.hpp"

// Dependency-free SVG figures: convergence curves, a top-down contour map of
// a scenario with trajectories, and an axonometric 3-D view.

namespace slsma::plots {

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline const char* colour(std::size_t k) {
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    return palette[k % 8];
}

inline std::string header(int w, int h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                            double width, const std::string& extra = "") {
    std::string s = "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\" " + extra +
                    "points=\"";
    for (const auto& [x, y] : pts) s += num(x) + "," + num(y) + " ";
    return s + "\"/>\n";
}

inline std::string text(double x, double y, const std::string& body, const std::string& extra = "") {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" " + extra + ">" + body + "</text>\n";
}

// Greyscale-green ramp from low (dark) to high (light).
inline std::string shade(double f) {
    f = std::clamp(f, 0.0, 1.0);
    const int r = static_cast<int>(60 + 170 * f), g = static_cast<int>(110 + 130 * f), b = static_cast<int>(60 + 150 * f);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

inline std::string star(double cx, double cy, double r, const std::string& fill) {
    std::string s = "<polygon fill=\"" + fill + "\" stroke=\"black\" points=\"";
    for (int k = 0; k < 10; ++k) {
        const double ang = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
        const double rr = k % 2 == 0 ? r : r * 0.45;
        s += num(cx + rr * std::cos(ang)) + "," + num(cy + rr * std::sin(ang)) + " ";
    }
    return s + "\"/>\n";
}

}  // namespace detail

/// Mean best-so-far fitness per algorithm against iteration. A log axis is
/// used when every mean is positive.
inline std::string convergence_svg(const Campaign& c) {
    constexpr int W = 760, H = 480, L = 80, R = 150, T = 30, B = 50;
    std::vector<std::pair<std::string, std::vector<double>>> curves;
    for (const auto& a : c.config.algorithms) {
        const std::string name = canonical_algorithm(a.name);
        std::vector<double> mean;
        std::size_t n = 0;
        for (const auto& r : c.runs) {
            if (r.algorithm != name) continue;
            if (mean.empty()) mean.assign(r.trace.size(), 0.0);
            for (std::size_t t = 0; t < r.trace.size() && t < mean.size(); ++t) mean[t] += r.trace[t];
            ++n;
        }
        if (n == 0) continue;
        for (auto& v : mean) v /= static_cast<double>(n);
        curves.emplace_back(name, std::move(mean));
    }

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    std::size_t len = 1;
    for (const auto& [_, m] : curves) {
        for (double v : m) lo = std::min(lo, v), hi = std::max(hi, v);
        len = std::max(len, m.size());
    }
    const bool log_axis = lo > 0.0;
    auto ty = [&](double v) { return log_axis ? std::log10(v) : v; };
    double ylo = curves.empty() ? 0.0 : ty(lo), yhi = curves.empty() ? 1.0 : ty(hi);
    if (yhi - ylo < 1e-12) ylo -= 0.5, yhi += 0.5;
    auto px = [&](double t) { return L + (W - L - R) * (len > 1 ? (t - 1) / static_cast<double>(len - 1) : 0.5); };
    auto py = [&](double v) { return T + (H - T - B) * (1.0 - (ty(v) - ylo) / (yhi - ylo)); };

    std::string s = detail::header(W, H);
    s += "<rect x=\"" + std::to_string(L) + "\" y=\"" + std::to_string(T) + "\" width=\"" + std::to_string(W - L - R) +
         "\" height=\"" + std::to_string(H - T - B) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = ylo + (yhi - ylo) * k / 4.0;
        const double y = T + (H - T - B) * (1.0 - k / 4.0);
        s += detail::text(L - 6, y + 4, fmt9(log_axis ? std::pow(10.0, v) : v).substr(0, 9), "text-anchor=\"end\"");
    }
    s += detail::text(L, H - 15, "iteration 1");
    s += detail::text(W - R, H - 15, std::to_string(len), "text-anchor=\"end\"");
    s += detail::text(15, T + (H - T - B) / 2.0, log_axis ? "mean best fitness (log)" : "mean best fitness",
                      "transform=\"rotate(-90 15 " + detail::num(T + (H - T - B) / 2.0) + ")\" text-anchor=\"middle\"");
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& [name, m] = curves[k];
        std::vector<std::pair<double, double>> pts;
        for (std::size_t t = 0; t < m.size(); ++t) pts.emplace_back(px(static_cast<double>(t + 1)), py(m[t]));
        s += "<g class=\"curve\" data-algorithm=\"" + name + "\">\n" +
             detail::polyline(pts, detail::colour(k), 1.6) + "</g>\n";
        s += detail::text(W - R + 12, T + 18 + 18.0 * static_cast<double>(k), name,
                          std::string("fill=\"") + detail::colour(k) + "\"");
    }
    return s + "</svg>\n";
}

/// Top-down map: shaded terrain heights, one group of elliptical contours
/// per obstacle, the smoothed trajectories, start (square) and terminal
/// (star) markers.
inline std::string contour_svg(const ScenarioSpec& scenario,
                               const std::vector<std::pair<std::string, SmoothTrajectory>>& trajectories,
                               std::size_t cells = 50) {
    constexpr int S = 640, M = 40, Legend = 130;
    const auto& tb = scenario.terrain.bounds;
    const double span = tb.upper - tb.lower;
    auto px = [&](double x) { return M + S * (x - tb.lower) / span; };
    auto py = [&](double y) { return M + S * (1.0 - (y - tb.lower) / span); };

    std::string s = detail::header(S + 2 * M + Legend, S + 2 * M);
    const auto grid = sample_grid(scenario.terrain, cells);
    double zmax = 1.0;
    for (const auto& g : grid) zmax = std::max(zmax, g.z);
    const double cell = static_cast<double>(S) / static_cast<double>(cells);
    s += "<g class=\"terrain\">\n";
    for (std::size_t j = 0; j < cells; ++j)
        for (std::size_t i = 0; i < cells; ++i) {
            const auto& g = grid[j * (cells + 1) + i];
            const double z = 0.25 * (g.z + grid[j * (cells + 1) + i + 1].z + grid[(j + 1) * (cells + 1) + i].z +
                                     grid[(j + 1) * (cells + 1) + i + 1].z);
            s += "<rect x=\"" + detail::num(M + cell * static_cast<double>(i)) + "\" y=\"" +
                 detail::num(M + S - cell * static_cast<double>(j + 1)) + "\" width=\"" + detail::num(cell + 0.3) +
                 "\" height=\"" + detail::num(cell + 0.3) + "\" fill=\"" + detail::shade(z / zmax) + "\"/>\n";
        }
    s += "</g>\n";

    // exp(-u^2 - v^2) = f is an ellipse with semi-axes slope * sqrt(ln(1/f)).
    for (const auto& o : scenario.terrain.obstacles) {
        s += "<g class=\"obstacle-cluster\" fill=\"none\" stroke=\"#4a3000\" stroke-width=\"0.8\">\n";
        for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const double k = std::sqrt(std::log(1.0 / f));
            s += "<ellipse cx=\"" + detail::num(px(o.center_x)) + "\" cy=\"" + detail::num(py(o.center_y)) +
                 "\" rx=\"" + detail::num(S * o.slope_x * k / span) + "\" ry=\"" +
                 detail::num(S * o.slope_y * k / span) + "\"/>\n";
        }
        s += "</g>\n";
    }

    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        const auto& [name, traj] = trajectories[k];
        s += "<g class=\"trajectory\" data-algorithm=\"" + name + "\">\n";
        for (const auto& path : traj) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : path) pts.emplace_back(px(p.x), py(p.y));
            s += detail::polyline(pts, detail::colour(k), 1.5);
        }
        s += "</g>\n";
        s += detail::text(S + 2 * M, M + 16 + 18.0 * static_cast<double>(k), name,
                          std::string("fill=\"") + detail::colour(k) + "\"");
    }

    const auto& g = scenario.geometry;
    for (std::size_t m = 0; m < g.drone_count; ++m) {
        s += "<rect class=\"start\" x=\"" + detail::num(px(g.starts[m].x) - 6) + "\" y=\"" +
             detail::num(py(g.starts[m].y) - 6) + "\" width=\"12\" height=\"12\" fill=\"#d62728\" stroke=\"black\"/>\n";
        s += detail::star(px(g.terminals[m].x), py(g.terminals[m].y), 9, "#1f77b4");
    }
    s += "<rect x=\"" + std::to_string(M) + "\" y=\"" + std::to_string(M) + "\" width=\"" + std::to_string(S) +
         "\" height=\"" + std::to_string(S) + "\" fill=\"none\" stroke=\"black\"/>\n";
    return s + "</svg>\n";
}

/// Axonometric 3-D view: terrain wireframe plus trajectories.
inline std::string view3d_svg(const ScenarioSpec& scenario,
                              const std::vector<std::pair<std::string, SmoothTrajectory>>& trajectories,
                              std::size_t cells = 30) {
    constexpr int W = 820, H = 620;
    const auto& tb = scenario.terrain.bounds;
    const double span = tb.upper - tb.lower;
    const double c30 = std::cos(std::numbers::pi / 6), s30 = 0.5;
    // Horizontal coordinates normalised to [0, 1], height to the same scale.
    auto project = [&](double x, double y, double z) {
        const double u = (x - tb.lower) / span, v = (y - tb.lower) / span, w = (z - tb.lower) / span;
        return std::pair{W / 2.0 + 330.0 * c30 * (u - v), H - 120.0 - 330.0 * s30 * (u + v) - 330.0 * w};
    };

    std::string s = detail::header(W, H);
    const auto grid = sample_grid(scenario.terrain, cells);
    s += "<g class=\"terrain-wireframe\" stroke=\"#7a8a70\" stroke-width=\"0.5\" fill=\"none\">\n";
    for (std::size_t j = 0; j <= cells; ++j) {
        std::vector<std::pair<double, double>> row, col;
        for (std::size_t i = 0; i <= cells; ++i) {
            const auto& a = grid[j * (cells + 1) + i];
            const auto& b = grid[i * (cells + 1) + j];
            row.push_back(project(a.x, a.y, a.z));
            col.push_back(project(b.x, b.y, b.z));
        }
        s += detail::polyline(row, "#7a8a70", 0.5) + detail::polyline(col, "#7a8a70", 0.5);
    }
    s += "</g>\n";
    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        const auto& [name, traj] = trajectories[k];
        s += "<g class=\"trajectory\" data-algorithm=\"" + name + "\">\n";
        for (const auto& path : traj) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : path) pts.push_back(project(p.x, p.y, p.z));
            s += detail::polyline(pts, detail::colour(k), 1.8);
        }
        s += "</g>\n";
        s += detail::text(20, 24 + 18.0 * static_cast<double>(k), name,
                          std::string("fill=\"") + detail::colour(k) + "\"");
    }
    return s + "</svg>\n";
}

/// Writes convergence.svg and, for path planning, contour.svg and view3d.svg
/// using each algorithm's best run. Returns the files written; a campaign
/// without algorithms produces none.
inline std::vector<fs::path> write_plots(const Campaign& c, const fs::path& dir, std::size_t samples = 0) {
    std::vector<fs::path> written;
    if (c.config.algorithms.empty() || c.runs.empty()) return written;
    fs::create_directories(dir);
    written.push_back(dir / "convergence.svg");
    write_text(written.back(), convergence_svg(c));
    if (c.config.kind == ProblemKind::PathPlanning) {
        const auto& spec = *c.config.scenario;
        std::vector<std::pair<std::string, SmoothTrajectory>> trajs;
        for (const RunResult* r : best_runs(c))
            trajs.emplace_back(r->algorithm, smooth_paths(decode(r->best_position, spec.geometry),
                                                          samples ? samples : c.config.spline_samples));
        written.push_back(dir / "contour.svg");
        write_text(written.back(), contour_svg(spec, trajs));
        written.push_back(dir / "view3d.svg");
        write_text(written.back(), view3d_svg(spec, trajs));
    }
    return written;
}

}  // namespace slsma::plots
