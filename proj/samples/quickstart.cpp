// Minimal library use: minimise a rotated Rastrigin with SLSMA, then plan
// paths over built-in scenario I.
#include <cstdio>

#include "slsma/slsma.hpp"

int main() {
    using namespace slsma;

    const auto inst = bench::make_instance(bench::FunctionId::Rastrigin, 10, 7);
    auto problem = Problem::box(inst.dim, bench::kDomainLower, bench::kDomainUpper,
                                [&](std::span<const double> x) { return bench::evaluate(inst, x); });
    Slsma opt;
    opt.init(problem, 30, 300, 42);
    while (opt.step()) {
    }
    std::printf("rastrigin-d10: best %.6f (optimum %.1f)\n", opt.best().fitness, inst.bias);

    ExperimentConfig cfg;
    cfg.kind = ProblemKind::PathPlanning;
    cfg.algorithms = {{"SLSMA", json::object()}};
    cfg.iterations = 100;
    cfg.scenario = builtin_scenario("I");
    const auto campaign = run_campaign(cfg);
    const auto& run = campaign.runs.front();
    std::printf("scenario I: total cost %.3f\n", run.cost->total);
    for (std::size_t m = 0; m < run.cost->drones.size(); ++m) {
        const auto& d = run.cost->drones[m];
        std::printf("  drone %zu  distance %.1f  obstacle %.0f  drone-collision %.0f\n", m + 1, d.distance,
                    d.obstacle_collision, d.drone_collision);
    }
}
