#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "slsma/plots.hpp"
#include "slsma/runner.hpp"

using namespace slsma;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("slsma_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig bench_config() {
    return config_from_json({{"problem", "benchmark"},
                             {"algorithms", {"SLSMA", "SMA", {{"name", "DE"}, {"params", {{"f", 0.6}}}}}},
                             {"population", 10},
                             {"iterations", 15},
                             {"runs", 3},
                             {"seed", 100},
                             {"benchmark", {{"function", "rastrigin"}, {"dim", 5}, {"instance_seed", 4}}}});
}

ExperimentConfig plan_config() {
    return config_from_json({{"problem", "path-planning"},
                             {"algorithms", {"SLSMA", "PSO"}},
                             {"population", 10},
                             {"iterations", 10},
                             {"runs", 2},
                             {"seed", 7},
                             {"scenario", "II"},
                             {"spline_samples", 25}});
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(Config, DefaultsAndRoundTrip) {
    const auto c = config_from_json({{"problem", "benchmark"}, {"algorithms", {"slsma"}}});
    EXPECT_EQ(c.population, 30u);
    EXPECT_EQ(c.iterations, 1000u);
    EXPECT_EQ(c.benchmark.dim, 30u);
    const auto p = config_from_json({{"problem", "path-planning"}, {"algorithms", {"SLSMA"}}});
    EXPECT_EQ(p.iterations, 500u);
    EXPECT_EQ(p.scenario->name, "I");

    const auto b = bench_config();
    EXPECT_EQ(to_json(config_from_json(to_json(b))), to_json(b));
    const auto q = plan_config();
    EXPECT_EQ(to_json(config_from_json(to_json(q))), to_json(q));
}

TEST(Config, Rejections) {
    const json base = to_json(bench_config());
    auto bad = base;
    bad["population"] = 3;
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
    bad = base;
    bad["iterations"] = 0;
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
    bad = base;
    bad["runs"] = 0;
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
    bad = base;
    bad["algorithms"] = {"NOPE"};
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
    bad = base;
    bad["problem"] = "other";
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
    bad = base;
    bad["schema"] = "slsma.experiment/9";
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
    bad = base;
    bad["benchmark"]["function"] = "sphere";
    EXPECT_THROW(config_from_json(bad), std::invalid_argument);
}

TEST(Config, DigestIgnoresExecutionDetails) {
    auto a = bench_config();
    auto b = a;
    b.jobs = 4;
    EXPECT_EQ(config_digest(a), config_digest(b));
    EXPECT_EQ(config_digest(a).size(), 16u);
    b.seed += 1;
    EXPECT_NE(config_digest(a), config_digest(b));
}

TEST(Campaign, SingleShortRun) {
    auto c = bench_config();
    c.algorithms.resize(1);
    c.runs = 1;
    c.iterations = 5;
    const auto camp = run_campaign(c);
    ASSERT_EQ(camp.runs.size(), 1u);
    const auto& r = camp.runs[0];
    EXPECT_EQ(r.trace.size(), 5u);
    for (std::size_t t = 1; t < 5; ++t) EXPECT_LE(r.trace[t], r.trace[t - 1]);
    EXPECT_EQ(r.seed, 100u);
    EXPECT_NO_THROW(validate_run(r, c));
}

TEST(Campaign, SeedsAndOrdering) {
    const auto camp = run_campaign(bench_config());
    ASSERT_EQ(camp.runs.size(), 9u);
    for (std::size_t k = 0; k < 9; ++k) {
        EXPECT_EQ(camp.runs[k].run, k % 3);
        EXPECT_EQ(camp.runs[k].seed, 100 + k % 3);
    }
    EXPECT_EQ(camp.runs[0].algorithm, "SLSMA");
    EXPECT_EQ(camp.runs[8].algorithm, "DE");
}

TEST(Campaign, ParallelMatchesSerial) {
    auto serial = plan_config();
    auto parallel = serial;
    parallel.jobs = 3;
    const auto a = run_campaign(serial), b = run_campaign(parallel);
    EXPECT_EQ(results_json(a).dump(), results_json(b).dump());
}

TEST(Campaign, PersistAndReload) {
    const auto dir = scratch("persist");
    const auto camp = run_campaign(plan_config());
    write_campaign(camp, dir);
    for (const char* f : {"config.json", "results.json", "convergence.csv", "timing.json", "paths_SLSMA.csv",
                          "paths_PSO.csv", "trajectories_SLSMA.csv", "trajectories_PSO.csv"})
        EXPECT_TRUE(fs::exists(dir / f)) << f;

    const auto back = read_campaign(dir);
    ASSERT_EQ(back.runs.size(), camp.runs.size());
    for (std::size_t k = 0; k < back.runs.size(); ++k) {
        EXPECT_EQ(back.runs[k].trace, camp.runs[k].trace);
        EXPECT_EQ(back.runs[k].best_position, camp.runs[k].best_position);
        EXPECT_NO_THROW(validate_run(back.runs[k], back.config));
        const auto again = total_cost(back.runs[k].best_position, back.config.scenario->geometry,
                                      back.config.scenario->terrain, back.config.scenario->cost);
        EXPECT_NEAR(again.total, back.runs[k].cost->total, 1e-9);
    }
    EXPECT_EQ(back.digest, camp.digest);

    const auto results = json::parse(read_text(dir / "results.json"));
    EXPECT_EQ(results["metadata"]["rng"], Rng::kAlgorithm);
    EXPECT_EQ(results["metadata"]["wilcoxon_exact_limit"], 8);
}

TEST(Campaign, CsvContracts) {
    const auto dir = scratch("csv");
    write_campaign(run_campaign(plan_config()), dir);
    const auto conv = read_text(dir / "convergence.csv");
    EXPECT_EQ(conv.substr(0, conv.find('\n')), "algorithm,run,iteration,best_fitness");
    EXPECT_EQ(count(conv, "\n"), 1u + 2 * 2 * 10);
    const auto traj = read_text(dir / "trajectories_SLSMA.csv");
    EXPECT_EQ(traj.substr(0, traj.find('\n')), "drone,sample,x,y,z");
    EXPECT_EQ(count(traj, "\n"), 1u + 5 * 25);
    const auto paths = read_text(dir / "paths_PSO.csv");
    EXPECT_EQ(paths.substr(0, paths.find('\n')), "drone,waypoint_index,x,y,z");
    EXPECT_EQ(count(paths, "\n"), 1u + 5 * 10);
    EXPECT_NE(paths.find("\n1,1,0,0,0\n"), std::string::npos);
    EXPECT_NE(paths.find("\n5,10,1000,1000,0"), std::string::npos);
    EXPECT_EQ(fmt9(1.0 / 3.0), "0.333333333");
    EXPECT_EQ(fmt9(123456789012.0), "1.23456789e+11");
}

TEST(Campaign, ValidationCatchesTampering) {
    const auto cfg = plan_config();
    const auto camp = run_campaign(cfg);
    auto r = camp.runs[0];
    r.trace[3] = r.trace[2] + 1;
    EXPECT_THROW(validate_run(r, cfg), std::runtime_error);
    r = camp.runs[0];
    r.best_fitness -= 1;
    EXPECT_THROW(validate_run(r, cfg), std::runtime_error);
    r = camp.runs[0];
    r.cost->total += 1e-6;
    EXPECT_THROW(validate_run(r, cfg), std::runtime_error);
    r = camp.runs[0];
    r.trace.pop_back();
    EXPECT_THROW(validate_run(r, cfg), std::runtime_error);
}

TEST(Compare, IdenticalResultSets) {
    const auto camp = run_campaign(bench_config());
    auto twin = camp;
    for (auto& r : twin.runs)
        if (r.algorithm == "SMA") {
            // Give SMA exactly SLSMA's finals.
            for (const auto& s : camp.runs)
                if (s.algorithm == "SLSMA" && s.run == r.run) r.best_fitness = s.best_fitness;
        }
    const auto rep = compare({twin}, "SLSMA");
    EXPECT_EQ(rep.mean_ranks[0], rep.mean_ranks[1]);
    EXPECT_FALSE(rep.chi_square.has_value());
    EXPECT_EQ(rep.pairwise.size(), 2u);
    EXPECT_EQ(rep.pairwise[0].algorithm, "SMA");
    EXPECT_EQ(rep.pairwise[0].test.p_value, 1.0);
}

TEST(Compare, DominatingAlgorithmAcrossProblems) {
    Campaign c;
    c.config = bench_config();
    c.config.algorithms = {{"SLSMA", json::object()}, {"GWO", json::object()}};
    c.config.runs = 30;
    for (const char* name : {"SLSMA", "GWO"})
        for (std::size_t r = 0; r < 30; ++r) {
            RunResult rr;
            rr.algorithm = name;
            rr.run = r;
            rr.best_fitness = (name == std::string("SLSMA") ? 0.0 : 100.0) + static_cast<double>(r);
            c.runs.push_back(rr);
        }
    auto c2 = c;
    c2.config.benchmark.function = bench::FunctionId::Levy;
    const auto rep = compare({c, c2}, "SLSMA");
    EXPECT_EQ(rep.mean_ranks, (std::vector<double>{1.0, 2.0}));
    ASSERT_TRUE(rep.chi_square.has_value());
    ASSERT_EQ(rep.pairwise.size(), 2u);
    EXPECT_TRUE(rep.pairwise[0].significant);
    EXPECT_LT(rep.pairwise[0].test.p_value, 0.05);
    EXPECT_EQ(rep.problems[1], "levy-d5");

    const auto dir = scratch("compare");
    write_comparison(rep, dir);
    for (const char* f : {"summary.csv", "wilcoxon.csv", "friedman.csv", "comparison.json"})
        EXPECT_TRUE(fs::exists(dir / f));
    const auto j = json::parse(read_text(dir / "comparison.json"));
    EXPECT_EQ(j["reference"], "SLSMA");
    EXPECT_EQ(j["wilcoxon"][0]["significant"], true);
}

TEST(Compare, Rejections) {
    auto camp = run_campaign(bench_config());
    EXPECT_THROW(compare({camp}, "PSO"), std::invalid_argument);
    auto uneven = camp;
    uneven.runs.pop_back();
    EXPECT_THROW(compare({uneven}, "SLSMA"), std::invalid_argument);
    EXPECT_THROW(compare({}, "SLSMA"), std::invalid_argument);
    auto single = camp;
    single.config.algorithms.resize(1);
    EXPECT_THROW(compare({single}, "SLSMA"), std::invalid_argument);
}

TEST(Plots, EmptyAlgorithmSetWritesNothing) {
    Campaign c;
    c.config = bench_config();
    c.config.algorithms.clear();
    const auto dir = scratch("plots_empty");
    EXPECT_TRUE(plots::write_plots(c, dir).empty());
    EXPECT_FALSE(fs::exists(dir / "convergence.svg"));
}

TEST(Plots, ScenarioFigures) {
    const auto dir = scratch("plots");
    const auto camp = run_campaign(plan_config());
    const auto files = plots::write_plots(camp, dir);
    ASSERT_EQ(files.size(), 3u);
    const auto contour = read_text(dir / "contour.svg");
    EXPECT_EQ(count(contour, "class=\"obstacle-cluster\""), 6u);
    EXPECT_EQ(count(contour, "class=\"start\""), 5u);
    EXPECT_EQ(count(contour, "class=\"trajectory\""), 2u);
    EXPECT_NE(read_text(dir / "view3d.svg").find("terrain-wireframe"), std::string::npos);
    EXPECT_EQ(read_text(dir / "convergence.svg").substr(0, 4), "<svg");
}

TEST(Plots, SingleRunMeanIsTheTrace) {
    auto cfg = bench_config();
    cfg.algorithms.resize(1);
    cfg.runs = 1;
    const auto one = run_campaign(cfg);
    auto doubled = one;
    doubled.runs.push_back(one.runs[0]);
    EXPECT_EQ(plots::convergence_svg(one), plots::convergence_svg(doubled));
}

TEST(Output, TerrainGridCsv) {
    const auto csv = terrain_grid_csv(builtin_scenario("I").terrain, 4);
    EXPECT_EQ(csv.substr(0, 6), "x,y,z\n");
    EXPECT_EQ(count(csv, "\n"), 1u + 25);
}
