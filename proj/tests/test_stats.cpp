#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "slsma/stats.hpp"

using namespace slsma::stats;

TEST(Summarize, Examples) {
    auto s = summarize(std::vector<double>{2, 2, 2});
    EXPECT_EQ(s.avg, 2);
    EXPECT_EQ(s.best, 2);
    EXPECT_EQ(s.std, 0);
    s = summarize(std::vector<double>{1, 3});
    EXPECT_EQ(s.avg, 2);
    EXPECT_EQ(s.best, 1);
    EXPECT_NEAR(s.std, std::sqrt(2.0), 1e-15);
    s = summarize(std::vector<double>{5});
    EXPECT_EQ(s.avg, 5);
    EXPECT_EQ(s.std, 0);
    EXPECT_THROW(summarize(std::vector<double>{}), std::invalid_argument);
    s = summarize(std::vector<double>{4, -1, 7, 7, 2});
    EXPECT_LE(s.best, s.avg);
    EXPECT_GE(s.std, 0);
}

TEST(Midranks, Ties) {
    EXPECT_EQ(midranks(std::vector<double>{3, 1, 3, 2}), (std::vector<double>{3.5, 1, 3.5, 2}));
}

TEST(Friedman, Dominance) {
    const auto f = friedman({{1, 2}, {3, 4}, {0.5, 9}});
    EXPECT_EQ(f.mean_ranks, (std::vector<double>{1, 2}));
}

TEST(Friedman, TiesShareRank) {
    const auto f = friedman({{1, 1}, {1, 2}});
    EXPECT_EQ(f.mean_ranks, (std::vector<double>{1.25, 1.75}));
}

TEST(Friedman, HandBuiltMatrix) {
    const std::vector<std::vector<double>> t{{1, 2, 3}, {2.5, 1.5, 3.5}, {3, 1, 2}, {1.2, 2.2, 0.9}};
    const auto f = friedman(t);
    EXPECT_EQ(f.mean_ranks, (std::vector<double>{2, 1.75, 2.25}));
    // 12n / (k(k+1)) * sum (R - (k+1)/2)^2 with n = 4, k = 3.
    const double textbook = 12.0 * 4 / (3 * 4) * (0.0 + 0.0625 + 0.0625);
    EXPECT_NEAR(f.chi_square, textbook, 1e-9);
    EXPECT_NEAR(f.chi_square, oracle::kFriedmanChi2, 1e-9);
    EXPECT_NEAR(f.p_value, oracle::kFriedmanP, 1e-12);
}

TEST(Friedman, MeanRanksSumAndMonotoneInvariance) {
    const std::vector<std::vector<double>> t{{4, 1, 3, 3}, {9, 2, 2, 5}, {0.1, 0.3, 0.2, 0.4}};
    auto u = t;
    for (auto& row : u)
        for (auto& v : row) v = std::exp(v) * 10 + 3;
    const auto a = friedman(t), b = friedman(u);
    double sum = 0;
    for (double r : a.mean_ranks) sum += r;
    EXPECT_NEAR(sum, 4.0 * 5.0 / 2.0, 1e-12);
    EXPECT_EQ(a.mean_ranks, b.mean_ranks);
    EXPECT_EQ(a.chi_square, b.chi_square);
}

TEST(Friedman, Errors) {
    EXPECT_THROW(friedman({{1, 2}}), std::invalid_argument);
    EXPECT_THROW(friedman({{1}, {2}}), std::invalid_argument);
    EXPECT_THROW(friedman({{1, 2}, {1, 2, 3}}), std::invalid_argument);
}

TEST(RankSum, ExactSmall) {
    const auto r = wilcoxon_rank_sum(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
    EXPECT_TRUE(r.exact);
    EXPECT_NEAR(r.p_value, 0.1, 1e-12);
    EXPECT_EQ(r.statistic, 6);
}

TEST(RankSum, ExactWithTies) {
    const auto r = wilcoxon_rank_sum(std::vector<double>{1, 2, 2, 5}, std::vector<double>{2, 3, 6, 7, 7});
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.statistic, 13);
    EXPECT_NEAR(r.p_value, oracle::kRankSumTiesExactP, 1e-12);
}

TEST(RankSum, IdenticalSamples) {
    const std::vector<double> a{3, 1, 4, 1, 5};
    EXPECT_EQ(wilcoxon_rank_sum(a, a).p_value, 1.0);
    std::vector<double> big(30);
    for (int i = 0; i < 30; ++i) big[i] = i % 7;
    EXPECT_EQ(wilcoxon_rank_sum(big, big).p_value, 1.0);
    const std::vector<double> flat(20, 2.0);
    EXPECT_EQ(wilcoxon_rank_sum(flat, flat).p_value, 1.0);
}

TEST(RankSum, AsymptoticSeparated) {
    std::vector<double> a(30), b(30);
    for (int k = 0; k < 30; ++k) {
        a[k] = 0.1 * k;
        b[k] = 0.1 * k + 2.5;
    }
    const auto r = wilcoxon_rank_sum(a, b);
    EXPECT_FALSE(r.exact);
    EXPECT_LT(r.p_value, 0.05);
    EXPECT_NEAR(r.p_value / oracle::kRankSumAsymptotic30P, 1.0, 1e-9);
}

TEST(RankSum, AsymptoticWithTies) {
    const std::vector<double> a{1, 2, 2, 3, 5, 7, 7.5, 9, 11, 12, 13}, b{2, 4, 6, 7, 8, 10, 14, 15, 16};
    const auto r = wilcoxon_rank_sum(a, b);
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.statistic, 100.5);
    EXPECT_NEAR(r.p_value, oracle::kRankSumTiesAsymptoticP, 1e-12);
}

TEST(RankSum, SymmetricAndRankBased) {
    const std::vector<double> a{0.3, 1.7, 2.2, 5.1, 0.9, 3.3, 4.4, 8.0, 0.1, 6.6},
        b{1.1, 2.9, 3.0, 7.7, 9.9, 4.0, 5.5, 6.0, 2.5};
    EXPECT_DOUBLE_EQ(wilcoxon_rank_sum(a, b).p_value, wilcoxon_rank_sum(b, a).p_value);
    auto ta = a, tb = b;
    for (auto& v : ta) v = std::log(v) * 3 + 1;
    for (auto& v : tb) v = std::log(v) * 3 + 1;
    EXPECT_EQ(wilcoxon_rank_sum(a, b).p_value, wilcoxon_rank_sum(ta, tb).p_value);
    const std::vector<double> sa{1, 4, 2}, sb{3, 6, 5, 0};
    EXPECT_DOUBLE_EQ(wilcoxon_rank_sum(sa, sb).p_value, wilcoxon_rank_sum(sb, sa).p_value);
}
