#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "slsma/optimizer.hpp"
#include "slsma/sma.hpp"

namespace slsma {

// ---------------------------------------------------------------------------
// Rank-based donor selection.

/// Rank R and selection probability P = R / NP per individual. The individual
/// at sorted position j (0-based, ascending fitness) has R = NP - 1 - j, so the
/// best has R = NP - 1 and the worst R = 0.
struct RankTable {
    std::vector<double> rank;
    std::vector<double> prob;
};

inline RankTable rank_probabilities(std::span<const std::size_t> order) {
    const std::size_t np = order.size();
    if (np < 4) throw std::invalid_argument("rank selection needs a population of at least 4");
    RankTable t{std::vector<double>(np), std::vector<double>(np)};
    for (std::size_t j = 0; j < np; ++j) {
        const double r = static_cast<double>(np - 1 - j);
        t.rank[order[j]] = r;
        t.prob[order[j]] = r / static_cast<double>(np);
    }
    return t;
}

inline constexpr std::size_t kSelectionRetryCap = 10000;

/// Donor indices for target i. r1 and r2 are drawn by rejection against the
/// rank probabilities, r3 uniformly; all four indices are distinct. After
/// `retry_cap` rejections a pick falls back to a uniform choice among the
/// admissible indices with non-zero probability.
inline std::array<std::size_t, 3> select_vectors(const RankTable& table, std::size_t i, Rng& rng,
                                                 std::size_t retry_cap = kSelectionRetryCap) {
    const std::size_t np = table.prob.size();
    if (np < 4) throw std::invalid_argument("rank selection needs a population of at least 4");

    auto ranked_pick = [&](std::size_t ex1, std::size_t ex2) {
        for (std::size_t attempt = 0; attempt < retry_cap; ++attempt) {
            const std::size_t r = rng.index(np);
            if (r == ex1 || r == ex2) continue;
            if (rng.uniform() < table.prob[r]) return r;
        }
        std::vector<std::size_t> admissible;
        for (std::size_t r = 0; r < np; ++r)
            if (r != ex1 && r != ex2 && table.prob[r] > 0.0) admissible.push_back(r);
        return admissible[rng.index(admissible.size())];
    };

    const std::size_t r1 = ranked_pick(i, i);
    const std::size_t r2 = ranked_pick(i, r1);
    std::size_t r3 = rng.index(np);
    while (r3 == i || r3 == r1 || r3 == r2) r3 = rng.index(np);
    return {r1, r2, r3};
}

/// x1 + 2 * u * a * (x2 - x3); u in [0, 1] is the scale draw.
inline std::vector<double> mutate(std::span<const double> x1, std::span<const double> x2,
                                  std::span<const double> x3, double a, double u) {
    std::vector<double> v(x1.size());
    const double scale = 2.0 * u * a;
    for (std::size_t d = 0; d < v.size(); ++d) v[d] = x1[d] + scale * (x2[d] - x3[d]);
    return v;
}

inline std::vector<double> mutate(std::span<const double> x1, std::span<const double> x2,
                                  std::span<const double> x3, double a, Rng& rng) {
    return mutate(x1, x2, x3, a, rng.uniform());
}

/// Switch probability z(t) = log10(1 + 0.8 exp((t + 1) / t_max)); rises with t.
inline double dynamic_z(std::size_t t, std::size_t t_max) {
    return std::log10(1.0 + 0.8 * std::exp(static_cast<double>(t + 1) / static_cast<double>(t_max)));
}

/// Returns the next stagnation counter value.
inline std::size_t stagnation_update(std::size_t counter, double new_best, double prev_best, double epsilon) {
    return std::abs(new_best - prev_best) < epsilon ? counter + 1 : 0;
}

/// lambda * best + (1 - lambda) * (mu .* (upper - lower) + lower).
inline std::vector<double> perturbed_point(std::span<const double> best, double lambda, std::span<const double> mu,
                                           std::span<const double> lower, std::span<const double> upper) {
    std::vector<double> x(best.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double fresh = mu[d] * (upper[d] - lower[d]) + lower[d];
        x[d] = lambda * best[d] + (1.0 - lambda) * fresh;
    }
    return x;
}

/// Number of individuals replaced by a perturbation: ceil(xi * NP).
inline std::size_t perturbation_count(double xi, std::size_t np) {
    // Guard against 0.1 * 30 = 3.0000000000000004.
    const double raw = xi * static_cast<double>(np);
    const double nearest = std::round(raw);
    const double count = std::abs(raw - nearest) < 1e-9 ? nearest : std::ceil(raw);
    return static_cast<std::size_t>(std::max(0.0, count));
}

struct SlsmaConfig {
    double cr = 0.5;
    double xi = 0.1;
    double epsilon = 1.0e-3;
    std::size_t n_stag = 15;
    std::size_t retry_cap = kSelectionRetryCap;
    /// Overrides the dynamic switch probability when set.
    std::optional<double> fixed_z;
};

/// Self-learning slime mould algorithm: SMA best-guided moves crossed with a
/// rank-based DE/rand/1 mutant, a rising switch probability for random
/// restarts, greedy replacement, and stagnation-triggered perturbation of the
/// worst individuals.
class Slsma : public Optimizer {
public:
    explicit Slsma(SlsmaConfig cfg = {}) : cfg_(cfg) {
        if (!(cfg_.cr >= 0.0 && cfg_.cr <= 1.0)) throw std::invalid_argument("SLSMA: Cr must lie in [0, 1]");
        if (!(cfg_.xi >= 0.0 && cfg_.xi <= 1.0)) throw std::invalid_argument("SLSMA: xi must lie in [0, 1]");
        if (!(cfg_.epsilon >= 0.0)) throw std::invalid_argument("SLSMA: epsilon must be non-negative");
        if (cfg_.n_stag < 1) throw std::invalid_argument("SLSMA: stagnation threshold must be at least 1");
    }

    std::string name() const override { return "SLSMA"; }
    const SlsmaConfig& config() const { return cfg_; }

    std::size_t stagnation_count() const { return stag_count_; }
    /// Individuals replaced by the most recent perturbation (empty if none
    /// fired this iteration).
    const std::vector<std::size_t>& last_perturbed() const { return last_perturbed_; }
    std::size_t perturbations_fired() const { return perturbations_; }

protected:
    std::size_t min_population() const override { return 4; }

    void on_init() override {
        stag_count_ = 0;
        perturbations_ = 0;
        last_perturbed_.clear();
        prev_best_.reset();
    }

    void iterate() override {
        last_perturbed_.clear();
        const std::size_t dim = problem_.dim;
        const double z = cfg_.fixed_z.value_or(dynamic_z(t_, t_max_));
        const double a = compute_a(t_, t_max_);

        std::vector<double> fitness(np_);
        for (std::size_t i = 0; i < np_; ++i) fitness[i] = population_[i].fitness;
        const auto order = ranking();
        const auto weights = compute_weights(fitness, order, rng_);
        const auto table = rank_probabilities(order);
        const std::vector<double> leader = best_.position;

        std::vector<Candidate> trials(np_);
        for (std::size_t i = 0; i < np_; ++i) {
            auto& x = trials[i].position;
            if (rng_.uniform() < z) {
                random_position(x);
            } else {
                x.resize(dim);
                const std::size_t forced = rng_.index(dim);
                const auto& xa = population_[rng_.index(np_)].position;
                const auto& xb = population_[rng_.index(np_)].position;
                std::vector<double> mutant;
                for (std::size_t d = 0; d < dim; ++d) {
                    if (rng_.uniform() < cfg_.cr || d == forced) {
                        x[d] = leader[d] + rng_.uniform(-a, a) * (weights[i] * xa[d] - xb[d]);
                    } else {
                        if (mutant.empty()) {
                            const auto r = select_vectors(table, i, rng_, cfg_.retry_cap);
                            mutant = mutate(population_[r[0]].position, population_[r[1]].position,
                                            population_[r[2]].position, a, rng_);
                        }
                        x[d] = mutant[d];
                    }
                }
            }
            clamp(x);
            trials[i].fitness = evaluate(x);
        }

        for (std::size_t i = 0; i < np_; ++i) {
            if (trials[i].fitness < population_[i].fitness) population_[i] = std::move(trials[i]);
            offer(population_[i]);
        }

        if (prev_best_) stag_count_ = stagnation_update(stag_count_, best_.fitness, *prev_best_, cfg_.epsilon);
        if (stag_count_ >= cfg_.n_stag) perturb();
        prev_best_ = best_.fitness;
    }

private:
    void perturb() {
        const auto order = ranking();
        // The incumbent is the population member holding the best fitness;
        // with ties, the first such member in index order.
        std::size_t incumbent = order.front();
        for (std::size_t i = 0; i < np_; ++i)
            if (population_[i].fitness == best_.fitness) {
                incumbent = i;
                break;
            }

        const std::size_t count = std::min(perturbation_count(cfg_.xi, np_), np_ - 1);
        std::vector<double> mu(problem_.dim);
        for (auto it = order.rbegin(); it != order.rend() && last_perturbed_.size() < count; ++it) {
            const std::size_t i = *it;
            if (i == incumbent) continue;
            const double lambda = rng_.uniform();
            for (auto& m : mu) m = rng_.uniform();
            auto& c = population_[i];
            c.position = perturbed_point(best_.position, lambda, mu, problem_.lower, problem_.upper);
            c.fitness = evaluate(c.position);
            offer(c);
            last_perturbed_.push_back(i);
        }
        stag_count_ = 0;
        ++perturbations_;
    }

    SlsmaConfig cfg_;
    std::size_t stag_count_ = 0;
    std::size_t perturbations_ = 0;
    std::vector<std::size_t> last_perturbed_;
    std::optional<double> prev_best_;
};

}  // namespace slsma
