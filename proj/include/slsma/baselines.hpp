#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "slsma/optimizer.hpp"

// Reference reimplementations of the comparison algorithms, each in its most
// widely used published form. Parameter defaults are the comparison settings.

namespace slsma {

struct DeConfig {
    double f = 0.5;
    double cr = 0.5;
};

/// DE/rand/1/bin with greedy replacement.
class De : public Optimizer {
public:
    explicit De(DeConfig cfg = {}) : cfg_(cfg) {}
    std::string name() const override { return "DE"; }

protected:
    std::size_t min_population() const override { return 4; }

    void iterate() override {
        const std::size_t dim = problem_.dim;
        std::vector<Candidate> trials(np_);
        for (std::size_t i = 0; i < np_; ++i) {
            std::size_t r1, r2, r3;
            do r1 = rng_.index(np_); while (r1 == i);
            do r2 = rng_.index(np_); while (r2 == i || r2 == r1);
            do r3 = rng_.index(np_); while (r3 == i || r3 == r1 || r3 == r2);
            const std::size_t forced = rng_.index(dim);
            auto& u = trials[i].position;
            u = population_[i].position;
            for (std::size_t d = 0; d < dim; ++d) {
                if (rng_.uniform() < cfg_.cr || d == forced)
                    u[d] = population_[r1].position[d] +
                           cfg_.f * (population_[r2].position[d] - population_[r3].position[d]);
            }
            clamp(u);
            trials[i].fitness = evaluate(u);
        }
        for (std::size_t i = 0; i < np_; ++i) {
            if (trials[i].fitness <= population_[i].fitness) population_[i] = std::move(trials[i]);
            offer(population_[i]);
        }
    }

private:
    DeConfig cfg_;
};

struct PsoConfig {
    double c1 = 2.0;
    double c2 = 2.0;
    double w = 0.4;
    /// Velocity limit as a fraction of each dimension's range.
    double v_max_fraction = 0.2;
};

/// Inertia-weight PSO with velocity clamping. Velocities start at zero.
class Pso : public Optimizer {
public:
    explicit Pso(PsoConfig cfg = {}) : cfg_(cfg) {}
    std::string name() const override { return "PSO"; }

    const std::vector<std::vector<double>>& velocities() const { return velocity_; }
    const std::vector<Candidate>& personal_best() const { return pbest_; }

protected:
    void on_init() override {
        velocity_.assign(np_, std::vector<double>(problem_.dim, 0.0));
        pbest_ = population_;
    }

    void iterate() override {
        const std::size_t dim = problem_.dim;
        const std::vector<double> gbest = best_.position;
        for (std::size_t i = 0; i < np_; ++i) {
            auto& x = population_[i].position;
            auto& v = velocity_[i];
            for (std::size_t d = 0; d < dim; ++d) {
                const double vmax = cfg_.v_max_fraction * (problem_.upper[d] - problem_.lower[d]);
                v[d] = cfg_.w * v[d] + cfg_.c1 * rng_.uniform() * (pbest_[i].position[d] - x[d]) +
                       cfg_.c2 * rng_.uniform() * (gbest[d] - x[d]);
                v[d] = std::clamp(v[d], -vmax, vmax);
                x[d] += v[d];
            }
            clamp(x);
            population_[i].fitness = evaluate(x);
            if (population_[i].fitness < pbest_[i].fitness) pbest_[i] = population_[i];
        }
        for (const auto& c : population_) offer(c);
    }

private:
    PsoConfig cfg_;
    std::vector<std::vector<double>> velocity_;
    std::vector<Candidate> pbest_;
};

/// Grey wolf optimizer; a falls linearly from 2 to 0 (reaching 0 at t_max).
class Gwo : public Optimizer {
public:
    std::string name() const override { return "GWO"; }

    /// Leader-guided position for one wolf given a and the three leaders,
    /// with the random coefficient draws taken from rng.
    static std::vector<double> hunt(std::span<const double> x, std::span<const double> alpha,
                                    std::span<const double> beta, std::span<const double> delta, double a, Rng& rng) {
        std::vector<double> out(x.size());
        const std::span<const double> leaders[3] = {alpha, beta, delta};
        for (std::size_t d = 0; d < x.size(); ++d) {
            double sum = 0.0;
            for (const auto& leader : leaders) {
                const double A = 2.0 * a * rng.uniform() - a;
                const double C = 2.0 * rng.uniform();
                const double dist = std::abs(C * leader[d] - x[d]);
                sum += leader[d] - A * dist;
            }
            out[d] = sum / 3.0;
        }
        return out;
    }

    const Candidate& alpha() const { return leaders_[0]; }
    const Candidate& beta() const { return leaders_[1]; }
    const Candidate& delta() const { return leaders_[2]; }

protected:
    std::size_t min_population() const override { return 3; }

    void on_init() override {
        const auto order = ranking();
        for (std::size_t k = 0; k < 3; ++k) leaders_[k] = population_[order[k]];
    }

    void iterate() override {
        const double a = 2.0 - 2.0 * static_cast<double>(t_) / static_cast<double>(t_max_);
        const auto leaders = leaders_;
        for (auto& c : population_) {
            c.position = hunt(c.position, leaders[0].position, leaders[1].position, leaders[2].position, a, rng_);
            clamp(c.position);
            c.fitness = evaluate(c.position);
            offer(c);
        }
        for (const auto& c : population_) admit(c);
    }

private:
    // Alpha, beta and delta are the three best positions seen so far.
    void admit(const Candidate& c) {
        if (c.fitness < leaders_[0].fitness) {
            leaders_[2] = leaders_[1];
            leaders_[1] = leaders_[0];
            leaders_[0] = c;
        } else if (c.fitness < leaders_[1].fitness) {
            leaders_[2] = leaders_[1];
            leaders_[1] = c;
        } else if (c.fitness < leaders_[2].fitness) {
            leaders_[2] = c;
        }
    }

    std::array<Candidate, 3> leaders_;
};

struct ScaConfig {
    double a = 2.0;
};

/// Sine cosine algorithm; r1 falls linearly from a to 0.
class Sca : public Optimizer {
public:
    explicit Sca(ScaConfig cfg = {}) : cfg_(cfg) {}
    std::string name() const override { return "SCA"; }

protected:
    void iterate() override {
        const double r1 = cfg_.a - static_cast<double>(t_) * cfg_.a / static_cast<double>(t_max_);
        const std::vector<double> dest = best_.position;
        for (auto& c : population_) {
            for (std::size_t d = 0; d < problem_.dim; ++d) {
                const double r2 = 2.0 * std::numbers::pi * rng_.uniform();
                const double r3 = 2.0 * rng_.uniform();
                const double r4 = rng_.uniform();
                const double gap = std::abs(r3 * dest[d] - c.position[d]);
                c.position[d] += r1 * (r4 < 0.5 ? std::sin(r2) : std::cos(r2)) * gap;
            }
            clamp(c.position);
            c.fitness = evaluate(c.position);
        }
        for (const auto& c : population_) offer(c);
    }

private:
    ScaConfig cfg_;
};

struct WoaConfig {
    double b = 1.0;
};

/// Whale optimization algorithm. As in the reference code, the |A| < 1 test
/// uses one scalar A per whale.
class Woa : public Optimizer {
public:
    explicit Woa(WoaConfig cfg = {}) : cfg_(cfg) {}
    std::string name() const override { return "WOA"; }

protected:
    void iterate() override {
        const double tt = static_cast<double>(t_), tm = static_cast<double>(t_max_);
        const double a = 2.0 - 2.0 * tt / tm;
        const double a2 = -1.0 - tt / tm;
        const std::vector<double> leader = best_.position;
        std::vector<std::vector<double>> snapshot(np_);
        for (std::size_t i = 0; i < np_; ++i) snapshot[i] = population_[i].position;

        for (std::size_t i = 0; i < np_; ++i) {
            auto& x = population_[i].position;
            const double A = 2.0 * a * rng_.uniform() - a;
            const double C = 2.0 * rng_.uniform();
            const double l = (a2 - 1.0) * rng_.uniform() + 1.0;
            const double p = rng_.uniform();
            if (p < 0.5) {
                const auto& target = std::abs(A) >= 1.0 ? snapshot[rng_.index(np_)] : leader;
                for (std::size_t d = 0; d < problem_.dim; ++d)
                    x[d] = target[d] - A * std::abs(C * target[d] - x[d]);
            } else {
                const double spiral = std::exp(cfg_.b * l) * std::cos(2.0 * std::numbers::pi * l);
                for (std::size_t d = 0; d < problem_.dim; ++d)
                    x[d] = std::abs(leader[d] - x[d]) * spiral + leader[d];
            }
            clamp(x);
            population_[i].fitness = evaluate(x);
        }
        for (const auto& c : population_) offer(c);
    }

private:
    WoaConfig cfg_;
};

/// Salp swarm algorithm. Following the reference code, the first half of the
/// chain are leaders around the food source (best-so-far) and the rest follow
/// the salp in front of them. c2, c3 ~ U[0, 1] per dimension.
class Ssa : public Optimizer {
public:
    std::string name() const override { return "SSA"; }

protected:
    void iterate() override {
        const double ratio = 4.0 * static_cast<double>(t_) / static_cast<double>(t_max_);
        const double c1 = 2.0 * std::exp(-ratio * ratio);
        const std::vector<double> food = best_.position;
        for (std::size_t i = 0; i < np_; ++i) {
            auto& x = population_[i].position;
            if (i < np_ / 2) {
                for (std::size_t d = 0; d < problem_.dim; ++d) {
                    const double c2 = rng_.uniform();
                    const double c3 = rng_.uniform();
                    const double step =
                        c1 * ((problem_.upper[d] - problem_.lower[d]) * c2 + problem_.lower[d]);
                    x[d] = c3 < 0.5 ? food[d] + step : food[d] - step;
                }
            } else {
                const auto& ahead = population_[i - 1].position;
                for (std::size_t d = 0; d < problem_.dim; ++d) x[d] = 0.5 * (x[d] + ahead[d]);
            }
            clamp(x);
        }
        for (auto& c : population_) {
            c.fitness = evaluate(c.position);
            offer(c);
        }
    }
};

}  // namespace slsma
