#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "slsma/benchfns.hpp"
#include "slsma/sma.hpp"

using namespace slsma;

namespace {

std::vector<std::size_t> sorted_order(const std::vector<double>& f) {
    std::vector<std::size_t> o(f.size());
    std::iota(o.begin(), o.end(), std::size_t{0});
    std::stable_sort(o.begin(), o.end(), [&](auto a, auto b) { return f[a] < f[b]; });
    return o;
}

Problem constant_problem(std::size_t dim, double lo, double hi) {
    return Problem::box(dim, lo, hi, [](std::span<const double>) { return 7.0; });
}

}  // namespace

TEST(ComputeA, Values) {
    EXPECT_EQ(compute_a(500, 500), 0.0);
    EXPECT_NEAR(compute_a(1, 500), oracle::kA_1_500, 1e-12);
    EXPECT_NEAR(compute_a(1, 500), 0.5 * std::log(999.0), 1e-12);
    EXPECT_NEAR(compute_a(250, 500), oracle::kAtanhHalf, 1e-12);
}

TEST(ComputeP, Values) {
    EXPECT_EQ(compute_p(3.0, 3.0), 0.0);
    EXPECT_NEAR(compute_p(4.0, 3.0), oracle::kTanh1, 1e-12);
    EXPECT_NEAR(compute_p(1e6, 0.0), 1.0, 1e-15);
}

TEST(Weights, BestIsOneAndBoundsHold) {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> f(30);
        for (auto& v : f) v = rng.uniform(-50, 900);
        const auto order = sorted_order(f);
        const auto w = compute_weights(f, order, rng);
        EXPECT_EQ(w[order.front()], 1.0);
        for (double x : w) {
            EXPECT_GE(x, 1.0 - std::log10(2.0) - 1e-12);
            EXPECT_LE(x, 1.0 + std::log10(2.0) + 1e-12);
            EXPECT_TRUE(std::isfinite(x));
        }
    }
}

TEST(Weights, AllEqualGivesOnes) {
    Rng rng(2);
    const std::vector<double> f(10, 3.5);
    for (double w : compute_weights(f, sorted_order(f), rng)) EXPECT_EQ(w, 1.0);
}

TEST(Weights, InvariantUnderConstantShift) {
    std::vector<double> f{5, 1, 9, 3, 7, 2, 8, 4};
    std::vector<double> g = f;
    for (auto& v : g) v += 1000.0;
    Rng r1(9), r2(9);
    const auto a = compute_weights(f, sorted_order(f), r1);
    const auto b = compute_weights(g, sorted_order(g), r2);
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
}

TEST(SmaOptimizer, ForcedReinitialisationResamplesEveryone) {
    Sma sma(SmaConfig{1.0});
    sma.init(constant_problem(6, -3, 4), 12, 10, 5);
    const auto before = sma.population();
    sma.step();
    for (std::size_t i = 0; i < before.size(); ++i) {
        EXPECT_NE(sma.population()[i].position, before[i].position);
        for (double x : sma.population()[i].position) {
            EXPECT_GE(x, -3.0);
            EXPECT_LT(x, 4.0);
        }
    }
}

TEST(SmaOptimizer, DegenerateFinalStepCollapsesToOrigin) {
    // Constant fitness gives p = 0, so every individual takes the v_c branch;
    // at t = t_max the range of v_c is zero.
    Sma sma(SmaConfig{0.0});
    sma.init(constant_problem(5, -10, 10), 8, 1, 3);
    sma.step();
    for (const auto& c : sma.population())
        for (double x : c.position) EXPECT_EQ(x, 0.0);
}

TEST(SmaOptimizer, NonFiniteObjectiveAborts) {
    int calls = 0;
    auto p = Problem::box(3, -1, 1, [&](std::span<const double>) { return ++calls > 15 ? NAN : 1.0; });
    Sma sma;
    sma.init(p, 10, 10, 1);
    EXPECT_THROW(sma.step(), NonFiniteObjective);
}

TEST(SmaOptimizer, ConvergesOnSphereLikeProblem) {
    const auto inst = bench::plain_instance(bench::FunctionId::BentCigar, 5);
    auto p = Problem::box(5, -100, 100, [&](std::span<const double> x) { return bench::evaluate(inst, x); });
    Sma sma;
    sma.init(p, 30, 300, 4);
    const double start = sma.best().fitness;
    while (sma.step()) {
    }
    EXPECT_LT(sma.best().fitness - 100.0, 1e-6 * (start - 100.0));
}

TEST(Optimizer, InitValidation) {
    Sma sma;
    EXPECT_THROW(sma.init(constant_problem(3, 0, 1), 1, 10, 1), std::invalid_argument);
    EXPECT_THROW(sma.init(constant_problem(3, 0, 1), 5, 0, 1), std::invalid_argument);
    EXPECT_THROW(sma.init(constant_problem(3, 1, 1), 5, 10, 1), std::invalid_argument);
    Problem none = constant_problem(3, 0, 1);
    none.objective = nullptr;
    EXPECT_THROW(sma.init(none, 5, 10, 1), std::invalid_argument);
}

TEST(Optimizer, StepStopsAtBudget) {
    Sma sma;
    sma.init(constant_problem(2, 0, 1), 4, 3, 1);
    EXPECT_TRUE(sma.step());
    EXPECT_TRUE(sma.step());
    EXPECT_TRUE(sma.step());
    EXPECT_FALSE(sma.step());
    EXPECT_EQ(sma.iteration(), 3u);
}

TEST(Rng, StreamIsPinned) {
    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.uniform(), b.uniform());
    Rng r(1);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(r.index(7), 7u);
    }
    // The standard fixes the engine's 10000th output for the default seed.
    std::mt19937_64 ref(5489u);
    ref.discard(9999);
    EXPECT_EQ(ref(), 9981545732273789042ULL);
}

TEST(Rng, IndexIsUniform) {
    Rng r(4);
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; ++i) ++counts[r.index(6)];
    for (int c : counts) EXPECT_NEAR(c, 10000, 400);
}
