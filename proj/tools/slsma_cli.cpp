#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "slsma/slsma.hpp"

namespace {

using namespace slsma;

struct RunOptions {
    std::string config_path;
    std::string algorithms;
    std::size_t population = 0;
    std::size_t iterations = 0;
    std::size_t runs = 0;
    std::uint64_t seed = 0;
    std::size_t jobs = 0;
    std::string out;
    bool plot = false;
    // bench
    std::string function;
    std::size_t dim = 0;
    std::uint64_t instance_seed = 0;
    // plan
    std::string scenario;
    std::size_t spline_samples = 0;
};

json load_json(const std::string& path) { return json::parse(read_text(path)); }

/// Scenario argument: a built-in name or a JSON file path.
json scenario_arg(const std::string& arg) {
    for (const auto& n : builtin_scenario_names())
        if (arg == n) return arg;
    return load_json(arg);
}

void add_run_options(CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--config", o.config_path, "experiment JSON; flags override its fields");
    cmd->add_option("--algorithms", o.algorithms, "comma-separated list (SLSMA,SMA,DE,PSO,GWO,SCA,WOA,SSA)");
    cmd->add_option("--population", o.population, "population size");
    cmd->add_option("--iterations", o.iterations, "iterations per run");
    cmd->add_option("--runs", o.runs, "independent runs per algorithm");
    cmd->add_option("--seed", o.seed, "base seed; run r uses seed + r");
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_option("--out", o.out, "output directory")->required();
    cmd->add_flag("--plot", o.plot, "also write SVG figures");
}

bool given(CLI::App* cmd, const std::string& flag) {
    const auto* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
}

json build_config(CLI::App* cmd, const RunOptions& o, const char* problem) {
    json j = o.config_path.empty() ? json::object() : load_json(o.config_path);
    if (j.contains("problem") && j["problem"] != problem)
        throw std::invalid_argument(std::string("config problem is not '") + problem + "'");
    j["problem"] = problem;
    if (given(cmd, "--algorithms")) {
        json list = json::array();
        std::size_t pos = 0;
        while (pos <= o.algorithms.size()) {
            const auto comma = o.algorithms.find(',', pos);
            const auto item = o.algorithms.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!item.empty()) list.push_back(item);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        j["algorithms"] = list;
    }
    if (!j.contains("algorithms")) j["algorithms"] = algorithm_names();
    if (given(cmd, "--population")) j["population"] = o.population;
    if (given(cmd, "--iterations")) j["iterations"] = o.iterations;
    if (given(cmd, "--runs")) j["runs"] = o.runs;
    if (given(cmd, "--seed")) j["seed"] = o.seed;
    if (given(cmd, "--jobs")) j["jobs"] = o.jobs;
    if (given(cmd, "--function")) j["benchmark"]["function"] = o.function;
    if (given(cmd, "--dim")) j["benchmark"]["dim"] = o.dim;
    if (given(cmd, "--instance-seed")) j["benchmark"]["instance_seed"] = o.instance_seed;
    if (given(cmd, "--scenario")) j["scenario"] = scenario_arg(o.scenario);
    if (given(cmd, "--spline-samples")) j["spline_samples"] = o.spline_samples;
    return j;
}

int run_experiment(CLI::App* cmd, const RunOptions& o, const char* problem) {
    const auto cfg = config_from_json(build_config(cmd, o, problem));
    const auto campaign = run_campaign(cfg);
    for (const auto& r : campaign.runs) validate_run(r, cfg);
    write_campaign(campaign, o.out);
    if (o.plot) plots::write_plots(campaign, o.out);

    std::printf("%-6s %14s %14s %14s\n", "alg", "mean", "best", "std");
    for (const auto& a : cfg.algorithms) {
        const auto name = canonical_algorithm(a.name);
        std::vector<double> finals;
        for (const auto& r : campaign.runs)
            if (r.algorithm == name) finals.push_back(r.best_fitness);
        const auto s = stats::summarize(finals);
        std::printf("%-6s %14.6g %14.6g %14.6g\n", name.c_str(), s.avg, s.best, s.std);
    }
    std::printf("results written to %s (config %s)\n", o.out.c_str(), campaign.digest.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-learning slime mould optimisation: benchmarks and multi-drone path planning"};
    app.require_subcommand(1);

    RunOptions bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "run optimizers on a shifted, rotated benchmark function");
    add_run_options(bench_cmd, bench_opts);
    bench_cmd->add_option("--function", bench_opts.function, "benchmark function name");
    bench_cmd->add_option("--dim", bench_opts.dim, "problem dimension");
    bench_cmd->add_option("--instance-seed", bench_opts.instance_seed, "seed for the shift vector and rotation");

    RunOptions plan_opts;
    auto* plan_cmd = app.add_subcommand("plan", "plan multi-drone paths over a terrain scenario");
    add_run_options(plan_cmd, plan_opts);
    plan_cmd->add_option("--scenario", plan_opts.scenario, "built-in scenario (I, II, III) or scenario JSON file");
    plan_cmd->add_option("--spline-samples", plan_opts.spline_samples, "samples per smoothed trajectory");

    std::vector<std::string> compare_dirs;
    std::string reference = "SLSMA", compare_out;
    auto* compare_cmd = app.add_subcommand("compare", "summary statistics, Friedman ranks and rank-sum tests");
    compare_cmd->add_option("dirs", compare_dirs, "result directories, one per problem")->required()->check(CLI::ExistingDirectory);
    compare_cmd->add_option("--reference", reference, "algorithm compared against all others");
    compare_cmd->add_option("--out", compare_out, "output directory")->required();

    std::string plot_dir, plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "render SVG figures from a result directory");
    plot_cmd->add_option("dir", plot_dir, "result directory")->required()->check(CLI::ExistingDirectory);
    plot_cmd->add_option("--out", plot_out, "output directory (defaults to the result directory)");

    std::string show_name = "I", grid_out;
    std::size_t grid_cells = 100;
    auto* show_cmd = app.add_subcommand("show-scenario", "print a scenario as JSON");
    show_cmd->add_option("scenario", show_name, "built-in name or scenario JSON file");
    show_cmd->add_option("--grid", grid_out, "also write terrain heights as x,y,z CSV to this file");
    show_cmd->add_option("--cells", grid_cells, "grid cells per side")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench_cmd) return run_experiment(bench_cmd, bench_opts, "benchmark");
        if (*plan_cmd) return run_experiment(plan_cmd, plan_opts, "path-planning");
        if (*compare_cmd) {
            std::vector<Campaign> campaigns;
            for (const auto& d : compare_dirs) campaigns.push_back(read_campaign(d));
            const auto report = compare(campaigns, reference);
            write_comparison(report, compare_out);
            std::cout << to_json(report).dump(2) << "\n";
            return 0;
        }
        if (*plot_cmd) {
            const auto files = plots::write_plots(read_campaign(plot_dir), plot_out.empty() ? plot_dir : plot_out);
            for (const auto& f : files) std::cout << f.string() << "\n";
            return 0;
        }
        if (*show_cmd) {
            const auto spec = scenario_from_json(scenario_arg(show_name));
            std::cout << to_json(spec).dump(2) << "\n";
            if (!grid_out.empty()) write_text(grid_out, terrain_grid_csv(spec.terrain, grid_cells));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
