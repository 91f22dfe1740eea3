#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "slsma/baselines.hpp"
#include "slsma/benchfns.hpp"
#include "slsma/cost.hpp"
#include "slsma/optimizer.hpp"
#include "slsma/scenario.hpp"
#include "slsma/self_learning_sma.hpp"
#include "slsma/sma.hpp"
#include "slsma/stats.hpp"

namespace slsma {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Algorithm registry

inline const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{"SLSMA", "SMA", "DE", "PSO", "GWO", "SCA", "WOA", "SSA"};
    return names;
}

inline std::string canonical_algorithm(std::string name) {
    for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (const auto& n : algorithm_names())
        if (n == name) return n;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

struct AlgorithmSpec {
    std::string name;
    json params = json::object();
};

/// Builds an optimizer from its name and parameter overrides. Unknown
/// parameter keys are rejected.
inline std::unique_ptr<Optimizer> make_optimizer(const AlgorithmSpec& spec) {
    const std::string name = canonical_algorithm(spec.name);
    const json& p = spec.params;
    auto check_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, _] : p.items()) {
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
                throw std::invalid_argument(name + ": unknown parameter '" + key + "'");
        }
    };
    if (name == "SLSMA") {
        check_keys({"cr", "xi", "epsilon", "n_stag", "z"});
        SlsmaConfig c;
        c.cr = p.value("cr", c.cr);
        c.xi = p.value("xi", c.xi);
        c.epsilon = p.value("epsilon", c.epsilon);
        c.n_stag = p.value("n_stag", c.n_stag);
        if (p.contains("z")) c.fixed_z = p.at("z").get<double>();
        return std::make_unique<Slsma>(c);
    }
    if (name == "SMA") {
        check_keys({"z"});
        return std::make_unique<Sma>(SmaConfig{p.value("z", 0.03)});
    }
    if (name == "DE") {
        check_keys({"f", "cr"});
        return std::make_unique<De>(DeConfig{p.value("f", 0.5), p.value("cr", 0.5)});
    }
    if (name == "PSO") {
        check_keys({"c1", "c2", "w", "v_max_fraction"});
        return std::make_unique<Pso>(
            PsoConfig{p.value("c1", 2.0), p.value("c2", 2.0), p.value("w", 0.4), p.value("v_max_fraction", 0.2)});
    }
    if (name == "GWO") {
        check_keys({});
        return std::make_unique<Gwo>();
    }
    if (name == "SCA") {
        check_keys({"a"});
        return std::make_unique<Sca>(ScaConfig{p.value("a", 2.0)});
    }
    if (name == "WOA") {
        check_keys({"b"});
        return std::make_unique<Woa>(WoaConfig{p.value("b", 1.0)});
    }
    check_keys({});
    return std::make_unique<Ssa>();
}

// ---------------------------------------------------------------------------
// Configuration

enum class ProblemKind { Benchmark, PathPlanning };

inline constexpr const char* kExperimentSchema = "slsma.experiment/1";
inline constexpr const char* kResultsSchema = "slsma.results/1";

struct BenchmarkSpec {
    bench::FunctionId function = bench::FunctionId::Rastrigin;
    std::size_t dim = 30;
    std::uint64_t instance_seed = 1;
};

struct ExperimentConfig {
    ProblemKind kind = ProblemKind::Benchmark;
    std::vector<AlgorithmSpec> algorithms;
    std::size_t population = 30;
    std::size_t iterations = 1000;
    std::size_t runs = 1;
    std::uint64_t seed = 1;
    BenchmarkSpec benchmark;
    std::optional<ScenarioSpec> scenario;
    std::size_t spline_samples = kDefaultSplineSamples;
    /// Worker threads; results do not depend on it.
    std::size_t jobs = 1;

    void validate() const {
        if (population < 4) throw std::invalid_argument("config: population must be at least 4");
        if (iterations < 1) throw std::invalid_argument("config: iterations must be at least 1");
        if (runs < 1) throw std::invalid_argument("config: runs must be at least 1");
        if (spline_samples < 2) throw std::invalid_argument("config: spline_samples must be at least 2");
        for (const auto& a : algorithms) (void)make_optimizer(a);
        if (kind == ProblemKind::Benchmark) {
            if (benchmark.dim < 2) throw std::invalid_argument("config: benchmark dimension must be at least 2");
        } else {
            if (!scenario) throw std::invalid_argument("config: path planning needs a scenario");
            scenario->validate();
        }
    }
};

/// Config as persisted and digested. Output location and worker count are
/// deliberately absent: they never change results.
inline json to_json(const ExperimentConfig& c) {
    json algos = json::array();
    for (const auto& a : c.algorithms) algos.push_back({{"name", canonical_algorithm(a.name)}, {"params", a.params}});
    json j{{"schema", kExperimentSchema},
           {"problem", c.kind == ProblemKind::Benchmark ? "benchmark" : "path-planning"},
           {"algorithms", algos},
           {"population", c.population},
           {"iterations", c.iterations},
           {"runs", c.runs},
           {"seed", c.seed}};
    if (c.kind == ProblemKind::Benchmark) {
        j["benchmark"] = {{"function", std::string(bench::info(c.benchmark.function).name)},
                          {"dim", c.benchmark.dim},
                          {"instance_seed", c.benchmark.instance_seed}};
    } else {
        j["scenario"] = to_json(*c.scenario);
        j["spline_samples"] = c.spline_samples;
    }
    return j;
}

inline ExperimentConfig config_from_json(const json& j) {
    if (j.contains("schema") && j.at("schema") != kExperimentSchema)
        throw std::invalid_argument("unsupported experiment schema " + j.at("schema").dump());
    ExperimentConfig c;
    const std::string problem = j.value("problem", std::string("benchmark"));
    if (problem == "benchmark") c.kind = ProblemKind::Benchmark;
    else if (problem == "path-planning") c.kind = ProblemKind::PathPlanning;
    else throw std::invalid_argument("config: problem must be 'benchmark' or 'path-planning'");

    for (const auto& a : j.value("algorithms", json::array())) {
        if (a.is_string()) c.algorithms.push_back({a.get<std::string>(), json::object()});
        else c.algorithms.push_back({a.at("name").get<std::string>(), a.value("params", json::object())});
    }
    c.population = j.value("population", c.population);
    c.iterations = j.value("iterations", c.kind == ProblemKind::Benchmark ? std::size_t{1000} : std::size_t{500});
    c.runs = j.value("runs", c.runs);
    c.seed = j.value("seed", c.seed);
    c.jobs = j.value("jobs", c.jobs);
    c.spline_samples = j.value("spline_samples", c.spline_samples);
    if (j.contains("benchmark")) {
        const auto& b = j.at("benchmark");
        c.benchmark.function = bench::parse_function(b.value("function", std::string("rastrigin")));
        c.benchmark.dim = b.value("dim", c.benchmark.dim);
        c.benchmark.instance_seed = b.value("instance_seed", c.seed);
    } else {
        c.benchmark.instance_seed = c.seed;
    }
    if (c.kind == ProblemKind::PathPlanning) c.scenario = scenario_from_json(j.value("scenario", json("I")));
    c.validate();
    return c;
}

/// FNV-1a 64 of the canonical config JSON, as 16 hex digits.
inline std::string config_digest(const ExperimentConfig& c) {
    const std::string text = to_json(c).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Runs

struct RunResult {
    std::string algorithm;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::vector<double> trace;  ///< best-so-far after each iteration
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::optional<CostBreakdown> cost;
    double wall_seconds = 0.0;
};

struct Campaign {
    ExperimentConfig config;
    std::string digest;
    std::vector<RunResult> runs;  ///< algorithm-major, then run index
};

/// The objective for a config, plus the instance it closes over.
inline Problem build_problem(const ExperimentConfig& cfg) {
    if (cfg.kind == ProblemKind::Benchmark) {
        auto inst = std::make_shared<const bench::BenchInstance>(
            bench::make_instance(cfg.benchmark.function, cfg.benchmark.dim, cfg.benchmark.instance_seed));
        return Problem::box(inst->dim, bench::kDomainLower, bench::kDomainUpper,
                            [inst](std::span<const double> x) { return bench::evaluate(*inst, x); });
    }
    auto spec = std::make_shared<const ScenarioSpec>(*cfg.scenario);
    return Problem::box(spec->geometry.dimension(), spec->geometry.bounds.lower, spec->geometry.bounds.upper,
                        [spec](std::span<const double> x) {
                            return total_cost(x, spec->geometry, spec->terrain, spec->cost).total;
                        });
}

inline RunResult execute_run(const ExperimentConfig& cfg, const Problem& problem, const AlgorithmSpec& algo,
                             std::size_t run) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    r.algorithm = canonical_algorithm(algo.name);
    r.run = run;
    r.seed = cfg.seed + run;
    auto opt = make_optimizer(algo);
    opt->init(problem, cfg.population, cfg.iterations, r.seed);
    r.trace.reserve(cfg.iterations);
    while (opt->step()) r.trace.push_back(opt->best().fitness);
    r.best_position = opt->best().position;
    r.best_fitness = opt->best().fitness;
    if (cfg.kind == ProblemKind::PathPlanning)
        r.cost = total_cost(r.best_position, cfg.scenario->geometry, cfg.scenario->terrain, cfg.scenario->cost);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs every (algorithm, run) pair; run r uses seed `seed + r`. With
/// jobs > 1 runs are spread across threads; results are identical.
inline Campaign run_campaign(const ExperimentConfig& cfg) {
    cfg.validate();
    Campaign c{cfg, config_digest(cfg), {}};
    const Problem problem = build_problem(cfg);
    const std::size_t total = cfg.algorithms.size() * cfg.runs;
    c.runs.resize(total);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            try {
                c.runs[k] = execute_run(cfg, problem, cfg.algorithms[k / cfg.runs], k % cfg.runs);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.jobs, total));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return c;
}

/// Throws std::runtime_error describing the first violated invariant.
inline void validate_run(const RunResult& r, const ExperimentConfig& cfg) {
    const std::string tag = r.algorithm + " run " + std::to_string(r.run) + ": ";
    if (r.trace.size() != cfg.iterations) throw std::runtime_error(tag + "trace length differs from iterations");
    for (std::size_t t = 1; t < r.trace.size(); ++t)
        if (r.trace[t] > r.trace[t - 1]) throw std::runtime_error(tag + "trace increases at iteration " + std::to_string(t + 1));
    if (r.trace.empty() || r.trace.back() != r.best_fitness)
        throw std::runtime_error(tag + "final fitness differs from the trace's last entry");
    if (cfg.kind == ProblemKind::PathPlanning) {
        if (!r.cost) throw std::runtime_error(tag + "missing cost breakdown");
        const auto again = total_cost(r.best_position, cfg.scenario->geometry, cfg.scenario->terrain, cfg.scenario->cost);
        if (std::abs(again.total - r.cost->total) > 1e-9)
            throw std::runtime_error(tag + "stored cost breakdown does not re-evaluate to its total");
        if (std::abs(r.cost->total - r.best_fitness) > 1e-9)
            throw std::runtime_error(tag + "cost total differs from best fitness");
    }
}

// ---------------------------------------------------------------------------
// Persistence

/// Fixed 9-significant-digit rendering used in every CSV file.
inline std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// Interpretive choices that affect results, stored with every result file.
inline json algorithm_metadata() {
    return {{"rng", Rng::kAlgorithm},
            {"seed_scheme", "run r uses seed base_seed + r"},
            {"sma_vc", "v_c ~ U[-c, c] per dimension, c = 1 - t/t_max"},
            {"sma_vb", "v_b ~ U[-a, a] per dimension, a = arctanh(1 - t/t_max), t starts at 1"},
            {"slsma_mutation_scale", "2 * U[0,1] * a (a as in v_b), one draw per trial vector"},
            {"slsma_donors", "rank-based r1, r2 and uniform r3, selected once per trial vector"},
            {"slsma_weights", "computed once per iteration from the pre-update population"},
            {"slsma_reinit", "gate and sample use independent uniform draws"},
            {"wilcoxon_exact_limit", stats::kExactRankSumLimit}};
}

inline json to_json(const RunResult& r) {
    json j{{"algorithm", r.algorithm},
           {"run", r.run},
           {"seed", r.seed},
           {"best_fitness", r.best_fitness},
           {"best_position", r.best_position},
           {"trace", r.trace}};
    if (r.cost) j["cost"] = to_json(*r.cost);
    return j;
}

inline RunResult run_from_json(const json& j) {
    RunResult r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.run = j.at("run").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.best_fitness = j.at("best_fitness").get<double>();
    r.best_position = j.at("best_position").get<std::vector<double>>();
    r.trace = j.at("trace").get<std::vector<double>>();
    if (j.contains("cost")) r.cost = breakdown_from_json(j.at("cost"));
    return r;
}

inline json results_json(const Campaign& c) {
    json j{{"schema", kResultsSchema},
           {"config_digest", c.digest},
           {"config", to_json(c.config)},
           {"metadata", algorithm_metadata()}};
    if (c.config.kind == ProblemKind::Benchmark) {
        const auto& b = c.config.benchmark;
        j["instance"] = {{"function", std::string(bench::info(b.function).name)},
                         {"dim", b.dim},
                         {"seed", b.instance_seed},
                         {"bias", bench::info(b.function).bias},
                         {"family", "CEC2017-like (seed-generated shift and rotation)"}};
    }
    json runs = json::array();
    for (const auto& r : c.runs) runs.push_back(to_json(r));
    j["runs"] = runs;
    return j;
}

inline Campaign campaign_from_json(const json& j) {
    if (j.value("schema", std::string()) != kResultsSchema) throw std::invalid_argument("not a results file");
    Campaign c;
    c.config = config_from_json(j.at("config"));
    c.digest = j.at("config_digest").get<std::string>();
    for (const auto& r : j.at("runs")) c.runs.push_back(run_from_json(r));
    return c;
}

inline void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

inline std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Best run (lowest final fitness, earliest run on ties) per algorithm, in
/// config order.
inline std::vector<const RunResult*> best_runs(const Campaign& c) {
    std::vector<const RunResult*> out;
    for (const auto& a : c.config.algorithms) {
        const RunResult* best = nullptr;
        for (const auto& r : c.runs)
            if (r.algorithm == canonical_algorithm(a.name) && (!best || r.best_fitness < best->best_fitness)) best = &r;
        if (best) out.push_back(best);
    }
    return out;
}

inline std::string convergence_csv(const Campaign& c) {
    std::string s = "algorithm,run,iteration,best_fitness\n";
    for (const auto& r : c.runs)
        for (std::size_t t = 0; t < r.trace.size(); ++t)
            s += r.algorithm + "," + std::to_string(r.run) + "," + std::to_string(t + 1) + "," + fmt9(r.trace[t]) + "\n";
    return s;
}

inline std::string paths_csv(const PathSet& paths) {
    std::string s = "drone,waypoint_index,x,y,z\n";
    for (std::size_t m = 0; m < paths.size(); ++m)
        for (std::size_t i = 0; i < paths[m].size(); ++i)
            s += std::to_string(m + 1) + "," + std::to_string(i + 1) + "," + fmt9(paths[m][i].x) + "," +
                 fmt9(paths[m][i].y) + "," + fmt9(paths[m][i].z) + "\n";
    return s;
}

inline std::string trajectory_csv(const SmoothTrajectory& traj) {
    std::string s = "drone,sample,x,y,z\n";
    for (std::size_t m = 0; m < traj.size(); ++m)
        for (std::size_t i = 0; i < traj[m].size(); ++i)
            s += std::to_string(m + 1) + "," + std::to_string(i) + "," + fmt9(traj[m][i].x) + "," +
                 fmt9(traj[m][i].y) + "," + fmt9(traj[m][i].z) + "\n";
    return s;
}

inline std::string terrain_grid_csv(const TerrainModel& model, std::size_t cells) {
    std::string s = "x,y,z\n";
    for (const auto& g : sample_grid(model, cells)) s += fmt9(g.x) + "," + fmt9(g.y) + "," + fmt9(g.z) + "\n";
    return s;
}

/// Writes results.json, config.json, convergence.csv, and for path planning
/// the best paths and smoothed trajectories per algorithm. Wall-clock times
/// go to timing.json, the only file that differs between identical runs.
inline void write_campaign(const Campaign& c, const fs::path& dir) {
    fs::create_directories(dir);
    write_text(dir / "config.json", to_json(c.config).dump(2) + "\n");
    write_text(dir / "results.json", results_json(c).dump(1) + "\n");
    write_text(dir / "convergence.csv", convergence_csv(c));
    json timing = json::array();
    for (const auto& r : c.runs)
        timing.push_back({{"algorithm", r.algorithm}, {"run", r.run}, {"wall_seconds", r.wall_seconds}});
    write_text(dir / "timing.json", timing.dump(1) + "\n");

    if (c.config.kind == ProblemKind::PathPlanning) {
        const auto& geom = c.config.scenario->geometry;
        for (const RunResult* r : best_runs(c)) {
            const auto paths = decode(r->best_position, geom);
            write_text(dir / ("paths_" + r->algorithm + ".csv"), paths_csv(paths));
            write_text(dir / ("trajectories_" + r->algorithm + ".csv"),
                       trajectory_csv(smooth_paths(paths, c.config.spline_samples)));
        }
    }
}

inline Campaign read_campaign(const fs::path& dir) {
    return campaign_from_json(json::parse(read_text(dir / "results.json")));
}

// ---------------------------------------------------------------------------
// Comparison

struct PairwiseTest {
    std::string problem;
    std::string algorithm;
    stats::RankSumResult test;
    bool significant = false;
};

struct ComparisonReport {
    std::string reference;
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::vector<std::vector<stats::RunSummary>> summaries;  ///< [problem][algorithm]
    std::vector<double> mean_ranks;
    std::optional<double> chi_square;
    std::optional<double> friedman_p;
    std::vector<PairwiseTest> pairwise;
};

inline constexpr double kSignificance = 0.05;

inline std::string problem_label(const Campaign& c) {
    if (c.config.kind == ProblemKind::Benchmark)
        return std::string(bench::info(c.config.benchmark.function).name) + "-d" + std::to_string(c.config.benchmark.dim);
    return "scenario-" + c.config.scenario->name;
}

/// Summaries, Friedman mean ranks over problems, and rank-sum tests of the
/// reference algorithm against every other one. Every campaign must cover the
/// same algorithms with equal run counts.
inline ComparisonReport compare(const std::vector<Campaign>& campaigns, const std::string& reference) {
    if (campaigns.empty()) throw std::invalid_argument("compare: no result sets");
    ComparisonReport rep;
    rep.reference = canonical_algorithm(reference);
    for (const auto& a : campaigns.front().config.algorithms) rep.algorithms.push_back(canonical_algorithm(a.name));
    if (rep.algorithms.size() < 2) throw std::invalid_argument("compare: need at least two algorithms");
    if (std::find(rep.algorithms.begin(), rep.algorithms.end(), rep.reference) == rep.algorithms.end())
        throw std::invalid_argument("compare: reference algorithm " + rep.reference + " not in the result sets");

    std::vector<std::vector<double>> table;
    for (const auto& c : campaigns) {
        std::map<std::string, std::vector<double>> finals;
        for (const auto& r : c.runs) finals[r.algorithm].push_back(r.best_fitness);
        if (finals.size() != rep.algorithms.size())
            throw std::invalid_argument("compare: result sets cover different algorithms");
        std::size_t runs = 0;
        std::vector<stats::RunSummary> row;
        std::vector<double> means;
        for (const auto& a : rep.algorithms) {
            const auto it = finals.find(a);
            if (it == finals.end()) throw std::invalid_argument("compare: " + a + " missing from a result set");
            if (runs == 0) runs = it->second.size();
            if (it->second.size() != runs) throw std::invalid_argument("compare: unequal run counts");
            row.push_back(stats::summarize(it->second));
            means.push_back(row.back().avg);
        }
        const std::string label = problem_label(c);
        rep.problems.push_back(label);
        rep.summaries.push_back(row);
        table.push_back(means);
        for (const auto& a : rep.algorithms) {
            if (a == rep.reference) continue;
            PairwiseTest pt{label, a, stats::wilcoxon_rank_sum(finals[rep.reference], finals[a]), false};
            pt.significant = pt.test.p_value < kSignificance;
            rep.pairwise.push_back(pt);
        }
    }

    if (table.size() >= 2) {
        const auto f = stats::friedman(table);
        rep.mean_ranks = f.mean_ranks;
        rep.chi_square = f.chi_square;
        rep.friedman_p = f.p_value;
    } else {
        rep.mean_ranks = stats::midranks(table.front());
    }
    return rep;
}

inline json to_json(const ComparisonReport& r) {
    json problems = json::array();
    for (std::size_t p = 0; p < r.problems.size(); ++p) {
        json algos = json::object();
        for (std::size_t a = 0; a < r.algorithms.size(); ++a) {
            const auto& s = r.summaries[p][a];
            algos[r.algorithms[a]] = {{"avg", s.avg}, {"best", s.best}, {"std", s.std}, {"runs", s.runs}};
        }
        problems.push_back({{"problem", r.problems[p]}, {"summary", algos}});
    }
    json ranks = json::object();
    for (std::size_t a = 0; a < r.algorithms.size(); ++a) ranks[r.algorithms[a]] = r.mean_ranks[a];
    json pairs = json::array();
    for (const auto& pt : r.pairwise)
        pairs.push_back({{"problem", pt.problem},
                         {"reference", r.reference},
                         {"algorithm", pt.algorithm},
                         {"statistic", pt.test.statistic},
                         {"p_value", pt.test.p_value},
                         {"method", pt.test.exact ? "exact" : "normal-approximation"},
                         {"significant", pt.significant}});
    return {{"reference", r.reference},
            {"alpha", kSignificance},
            {"problems", problems},
            {"friedman",
             {{"mean_ranks", ranks},
              {"chi_square", r.chi_square ? json(*r.chi_square) : json(nullptr)},
              {"p_value", r.friedman_p ? json(*r.friedman_p) : json(nullptr)}}},
            {"wilcoxon", pairs}};
}

inline void write_comparison(const ComparisonReport& r, const fs::path& dir) {
    fs::create_directories(dir);
    write_text(dir / "comparison.json", to_json(r).dump(2) + "\n");
    std::string summary = "problem,algorithm,avg,best,std,runs\n";
    for (std::size_t p = 0; p < r.problems.size(); ++p)
        for (std::size_t a = 0; a < r.algorithms.size(); ++a) {
            const auto& s = r.summaries[p][a];
            summary += r.problems[p] + "," + r.algorithms[a] + "," + fmt9(s.avg) + "," + fmt9(s.best) + "," +
                       fmt9(s.std) + "," + std::to_string(s.runs) + "\n";
        }
    write_text(dir / "summary.csv", summary);
    std::string ranks = "algorithm,mean_rank\n";
    for (std::size_t a = 0; a < r.algorithms.size(); ++a) ranks += r.algorithms[a] + "," + fmt9(r.mean_ranks[a]) + "\n";
    write_text(dir / "friedman.csv", ranks);
    std::string pairs = "problem,reference,algorithm,statistic,p_value,significant\n";
    for (const auto& pt : r.pairwise)
        pairs += pt.problem + "," + r.reference + "," + pt.algorithm + "," + fmt9(pt.test.statistic) + "," +
                 fmt9(pt.test.p_value) + "," + (pt.significant ? "1" : "0") + "\n";
    write_text(dir / "wilcoxon.csv", pairs);
}

}  // namespace slsma
