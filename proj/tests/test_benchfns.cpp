#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "slsma/benchfns.hpp"
#include "slsma/rng.hpp"

using namespace slsma;
using namespace slsma::bench;

TEST(Bench, Registry) {
    EXPECT_EQ(kFunctions.size(), 9u);
    for (std::size_t i = 0; i < kFunctions.size(); ++i) {
        EXPECT_EQ(parse_function(kFunctions[i].name), kFunctions[i].id);
        EXPECT_EQ(kFunctions[i].bias, 100.0 * static_cast<double>(i + 1));
    }
    EXPECT_THROW(parse_function("sphere"), std::invalid_argument);
}

TEST(Bench, InstancesAreDeterministic) {
    for (const auto& f : kFunctions) {
        const auto a = make_instance(f.id, 10, 42), b = make_instance(f.id, 10, 42);
        EXPECT_EQ(a.shift, b.shift);
        EXPECT_TRUE(a.rotation == b.rotation);
    }
    EXPECT_NE(make_instance(FunctionId::Rastrigin, 10, 1).shift, make_instance(FunctionId::Rastrigin, 10, 2).shift);
}

TEST(Bench, RotationOrthogonalAndShiftInterior) {
    for (std::size_t dim : {2u, 10u, 30u})
        for (std::uint64_t seed : {1u, 7u, 1234u}) {
            const auto inst = make_instance(FunctionId::Rastrigin, dim, seed);
            const Eigen::MatrixXd rtr = inst.rotation.transpose() * inst.rotation;
            EXPECT_TRUE(rtr.isApprox(Eigen::MatrixXd::Identity(dim, dim), 1e-9)) << dim;
            EXPECT_LT((rtr - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-9);
            for (double s : inst.shift) {
                EXPECT_GT(s, kDomainLower);
                EXPECT_LT(s, kDomainUpper);
            }
        }
}

TEST(Bench, ShiftEvaluatesToBias) {
    for (const auto& f : kFunctions)
        for (std::uint64_t seed : {3u, 99u}) {
            const auto inst = make_instance(f.id, 10, seed);
            // Schwefel's optimum sits at 420.9687... in native units, so its
            // value at the shift is the bias up to that constant's rounding.
            const double tol = f.id == FunctionId::Schwefel ? 1e-8 : 0.0;
            EXPECT_NEAR(evaluate(inst, inst.shift), f.bias, tol) << f.name;
        }
}

TEST(Bench, ShiftIsTheMinimiserUnderRotation) {
    Rng rng(5);
    for (const auto id : {FunctionId::BentCigar, FunctionId::Zakharov, FunctionId::Rastrigin, FunctionId::Rosenbrock,
                          FunctionId::Levy}) {
        const auto inst = make_instance(id, 10, 17);
        const double at_opt = evaluate(inst, inst.shift);
        for (int k = 0; k < 200; ++k) {
            std::vector<double> x(inst.shift);
            for (auto& v : x) v += rng.uniform(-5, 5);
            EXPECT_GE(evaluate(inst, x), at_opt);
        }
    }
}

TEST(Bench, NonNegativeMembersNeverBelowBias) {
    Rng rng(6);
    for (const auto id : {FunctionId::BentCigar, FunctionId::Zakharov, FunctionId::Rastrigin}) {
        const auto inst = make_instance(id, 30, 8);
        for (int k = 0; k < 300; ++k) {
            std::vector<double> x(30);
            for (auto& v : x) v = rng.uniform(kDomainLower, kDomainUpper);
            EXPECT_GE(evaluate(inst, x), inst.bias);
        }
    }
}

TEST(Bench, PlainInstanceBaseValues) {
    const std::vector<double> zeros(10, 0.0);
    EXPECT_EQ(evaluate(plain_instance(FunctionId::Rastrigin, 10), zeros), 400.0);
    const std::vector<double> ones(7, 1.0);
    EXPECT_EQ(evaluate(plain_instance(FunctionId::BentCigar, 7), ones), 100.0 + 1.0 + 1e6 * 6);
    // Rastrigin is evaluated on x scaled to its native range.
    const std::vector<double> unit{100.0 / 5.12, 0.0};
    EXPECT_NEAR(evaluate(plain_instance(FunctionId::Rastrigin, 2), unit), 401.0, 1e-9);
}

TEST(Bench, DimensionErrors) {
    EXPECT_THROW(make_instance(FunctionId::Levy, 1, 1), std::invalid_argument);
    const auto inst = plain_instance(FunctionId::Levy, 4);
    EXPECT_THROW(evaluate(inst, std::vector<double>(3, 0.0)), std::invalid_argument);
}

TEST(Bench, EveryFunctionFiniteOverDomain) {
    Rng rng(10);
    for (const auto& f : kFunctions) {
        const auto inst = make_instance(f.id, 30, 2);
        for (int k = 0; k < 100; ++k) {
            std::vector<double> x(30);
            for (auto& v : x) v = rng.uniform(kDomainLower, kDomainUpper);
            const double y = evaluate(inst, x);
            EXPECT_TRUE(std::isfinite(y)) << f.name;
            EXPECT_GT(y, f.bias - 1e-6) << f.name;
        }
    }
}
