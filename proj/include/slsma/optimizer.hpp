#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "slsma/rng.hpp"

namespace slsma {

using Objective = std::function<double(std::span<const double>)>;

/// Box-constrained minimisation problem. The objective must be reentrant:
/// independent runs call it concurrently.
struct Problem {
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    Objective objective;

    static Problem box(std::size_t dim, double lo, double hi, Objective f) {
        return {dim, std::vector<double>(dim, lo), std::vector<double>(dim, hi), std::move(f)};
    }

    void validate() const {
        if (dim == 0) throw std::invalid_argument("problem: dimension must be positive");
        if (lower.size() != dim || upper.size() != dim)
            throw std::invalid_argument("problem: bound vectors must match the dimension");
        for (std::size_t d = 0; d < dim; ++d)
            if (!(lower[d] < upper[d])) throw std::invalid_argument("problem: lower bound must be below upper bound");
        if (!objective) throw std::invalid_argument("problem: missing objective");
    }
};

/// Raised when the objective returns NaN or an infinity; aborts the run.
class NonFiniteObjective : public std::runtime_error {
public:
    NonFiniteObjective(const std::string& algorithm, std::size_t iteration, std::span<const double> x)
        : std::runtime_error(describe(algorithm, iteration, x)) {}

private:
    static std::string describe(const std::string& algorithm, std::size_t iteration, std::span<const double> x) {
        std::string msg = algorithm + ": objective returned a non-finite value at iteration " +
                          std::to_string(iteration) + " for x = [";
        for (std::size_t i = 0; i < x.size() && i < 6; ++i) msg += (i ? ", " : "") + std::to_string(x[i]);
        if (x.size() > 6) msg += ", ...";
        return msg + "]";
    }
};

struct Candidate {
    std::vector<double> position;
    double fitness = std::numeric_limits<double>::infinity();
};

/// Common driver surface: init(problem, seed) once, then step() per
/// iteration. best() is the best-so-far over the whole history.
class Optimizer {
public:
    virtual ~Optimizer() = default;

    virtual std::string name() const = 0;

    void init(const Problem& problem, std::size_t population_size, std::size_t max_iterations, std::uint64_t seed) {
        problem.validate();
        if (population_size < min_population())
            throw std::invalid_argument(name() + ": population size must be at least " +
                                        std::to_string(min_population()));
        if (max_iterations < 1) throw std::invalid_argument(name() + ": need at least one iteration");
        problem_ = problem;
        np_ = population_size;
        t_max_ = max_iterations;
        t_ = 0;
        rng_ = Rng(seed);
        best_ = Candidate{};
        population_.assign(np_, Candidate{});
        for (auto& c : population_) {
            c.position.resize(problem_.dim);
            for (std::size_t d = 0; d < problem_.dim; ++d)
                c.position[d] = rng_.uniform(problem_.lower[d], problem_.upper[d]);
            c.fitness = evaluate(c.position);
            offer(c);
        }
        on_init();
    }

    /// Advances one iteration. Returns false once max_iterations is reached.
    bool step() {
        if (t_ >= t_max_) return false;
        ++t_;
        iterate();
        return true;
    }

    /// Replaces the population with explicit positions (re-evaluated and
    /// clamped) and resets algorithm state as after init(). Must follow init().
    void seed_population(std::vector<std::vector<double>> positions) {
        if (positions.size() != np_) throw std::invalid_argument(name() + ": seeded population has the wrong size");
        best_ = Candidate{};
        for (std::size_t i = 0; i < np_; ++i) {
            if (positions[i].size() != problem_.dim)
                throw std::invalid_argument(name() + ": seeded position has the wrong dimension");
            population_[i].position = std::move(positions[i]);
            clamp(population_[i].position);
            population_[i].fitness = evaluate(population_[i].position);
            offer(population_[i]);
        }
        on_init();
    }

    const Candidate& best() const { return best_; }
    const std::vector<Candidate>& population() const { return population_; }
    std::size_t iteration() const { return t_; }
    std::size_t max_iterations() const { return t_max_; }
    const Problem& problem() const { return problem_; }

protected:
    virtual std::size_t min_population() const { return 2; }
    virtual void on_init() {}
    virtual void iterate() = 0;

    double evaluate(std::span<const double> x) const {
        const double f = problem_.objective(x);
        if (!std::isfinite(f)) throw NonFiniteObjective(name(), t_, x);
        return f;
    }

    void clamp(std::vector<double>& x) const {
        for (std::size_t d = 0; d < x.size(); ++d) x[d] = std::clamp(x[d], problem_.lower[d], problem_.upper[d]);
    }

    void random_position(std::vector<double>& x) {
        x.resize(problem_.dim);
        for (std::size_t d = 0; d < problem_.dim; ++d) x[d] = rng_.uniform(problem_.lower[d], problem_.upper[d]);
    }

    /// Records c as the best-so-far if strictly better.
    void offer(const Candidate& c) {
        if (c.fitness < best_.fitness) best_ = c;
    }

    /// Indices of the population sorted by ascending fitness; ties keep index order.
    std::vector<std::size_t> ranking() const {
        std::vector<std::size_t> order(population_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return population_[a].fitness < population_[b].fitness; });
        return order;
    }

    Problem problem_;
    std::size_t np_ = 0;
    std::size_t t_max_ = 0;
    std::size_t t_ = 0;
    Rng rng_{0};
    Candidate best_;
    std::vector<Candidate> population_;
};

}  // namespace slsma
