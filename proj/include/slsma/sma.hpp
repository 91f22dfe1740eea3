#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "slsma/optimizer.hpp"

namespace slsma {

/// Oscillation bound a(t) = arctanh(1 - t / t_max). Iterations start at 1 so
/// the value stays finite.
inline double compute_a(std::size_t t, std::size_t t_max) {
    return std::atanh(1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

/// p = tanh|fit_i - fit_best|.
inline double compute_p(double fit_i, double fit_best) { return std::tanh(std::abs(fit_i - fit_best)); }

inline constexpr double kWeightEpsilon = 1e-12;

/// Slime mould weights, indexed by individual. `order` lists individuals by
/// ascending fitness. The better half (order positions < NP/2) gets
/// 1 + r*log10(ratio + 1), the rest 1 - r*log10(ratio + 1), where ratio is the
/// fitness gap to the best over the best-worst spread.
inline std::vector<double> compute_weights(std::span<const double> fitness, std::span<const std::size_t> order,
                                           Rng& rng) {
    const std::size_t np = fitness.size();
    std::vector<double> w(np, 1.0);
    if (np == 0) return w;
    const double bf = fitness[order.front()];
    const double wf = fitness[order.back()];
    const double spread = (wf - bf) + kWeightEpsilon;
    for (std::size_t j = 0; j < np; ++j) {
        const std::size_t i = order[j];
        const double term = std::log10((fitness[i] - bf) / spread + 1.0);
        const double r = rng.uniform();
        w[i] = (j < np / 2) ? 1.0 + r * term : 1.0 - r * term;
    }
    return w;
}

struct SmaConfig {
    double z = 0.03;
};

/// Classic slime mould algorithm.
class Sma : public Optimizer {
public:
    explicit Sma(SmaConfig cfg = {}) : cfg_(cfg) {}

    std::string name() const override { return "SMA"; }
    const SmaConfig& config() const { return cfg_; }

protected:
    void iterate() override {
        const std::size_t dim = problem_.dim;
        const double a = compute_a(t_, t_max_);
        const double c = 1.0 - static_cast<double>(t_) / static_cast<double>(t_max_);

        std::vector<double> fitness(np_);
        for (std::size_t i = 0; i < np_; ++i) fitness[i] = population_[i].fitness;
        const auto order = ranking();
        const auto weights = compute_weights(fitness, order, rng_);
        const Candidate leader = best_;

        std::vector<std::vector<double>> next(np_);
        for (std::size_t i = 0; i < np_; ++i) {
            auto& x = next[i];
            if (rng_.uniform() < cfg_.z) {
                random_position(x);
                continue;
            }
            x = population_[i].position;
            const double p = compute_p(population_[i].fitness, leader.fitness);
            const bool toward_best = rng_.uniform() < p;
            const auto& xa = population_[rng_.index(np_)].position;
            const auto& xb = population_[rng_.index(np_)].position;
            for (std::size_t d = 0; d < dim; ++d) {
                if (toward_best)
                    x[d] = leader.position[d] + rng_.uniform(-a, a) * (weights[i] * xa[d] - xb[d]);
                else
                    x[d] = rng_.uniform(-c, c) * x[d];
            }
        }
        for (std::size_t i = 0; i < np_; ++i) {
            clamp(next[i]);
            population_[i].position = std::move(next[i]);
            population_[i].fitness = evaluate(population_[i].position);
            offer(population_[i]);
        }
    }

private:
    SmaConfig cfg_;
};

}  // namespace slsma
