#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace slsma::stats {

struct RunSummary {
    double avg = 0.0;
    double best = 0.0;
    double std = 0.0;  ///< sample standard deviation (n - 1); 0 for a single run
    std::size_t runs = 0;
};

inline RunSummary summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: no values");
    RunSummary s;
    s.runs = values.size();
    s.avg = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.runs);
    s.best = *std::min_element(values.begin(), values.end());
    if (s.runs > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.avg) * (v - s.avg);
        s.std = std::sqrt(ss / static_cast<double>(s.runs - 1));
    }
    return s;
}

/// Ascending ranks starting at 1; tied values share their mean rank.
inline std::vector<double> midranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
        i = j + 1;
    }
    return ranks;
}

struct FriedmanResult {
    std::vector<double> mean_ranks;  ///< per algorithm; 1 = best (lowest)
    double chi_square = 0.0;
    double p_value = 1.0;
    std::size_t problems = 0;
};

/// Friedman test over a problems x algorithms table of mean fitness values
/// (table[p][a]). Lower fitness ranks better.
inline FriedmanResult friedman(const std::vector<std::vector<double>>& table) {
    if (table.size() < 2) throw std::invalid_argument("friedman: need at least two problems");
    const std::size_t k = table.front().size();
    if (k < 2) throw std::invalid_argument("friedman: need at least two algorithms");
    for (const auto& row : table)
        if (row.size() != k) throw std::invalid_argument("friedman: ragged table");

    const auto n = static_cast<double>(table.size());
    const auto kd = static_cast<double>(k);
    FriedmanResult out;
    out.problems = table.size();
    out.mean_ranks.assign(k, 0.0);
    for (const auto& row : table) {
        const auto r = midranks(row);
        for (std::size_t a = 0; a < k; ++a) out.mean_ranks[a] += r[a];
    }
    for (auto& r : out.mean_ranks) r /= n;

    double dev = 0.0;
    for (double r : out.mean_ranks) dev += (r - (kd + 1.0) / 2.0) * (r - (kd + 1.0) / 2.0);
    out.chi_square = 12.0 * n / (kd * (kd + 1.0)) * dev;
    out.p_value = boost::math::gamma_q((kd - 1.0) / 2.0, out.chi_square / 2.0);
    return out;
}

struct RankSumResult {
    double statistic = 0.0;  ///< rank sum of the first sample
    double p_value = 1.0;    ///< two-sided
    bool exact = false;
};

inline constexpr std::size_t kExactRankSumLimit = 8;

namespace detail {

inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace detail

/// Wilcoxon rank-sum (Mann-Whitney) test with midranks for ties. Exact
/// enumeration of the permutation distribution when both samples have at
/// most eight values; otherwise the tie-corrected normal approximation with
/// continuity correction.
inline RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = midranks(pooled);

    RankSumResult out;
    out.statistic = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n1), 0.0);
    const double expected = static_cast<double>(n1) * static_cast<double>(n + 1) / 2.0;
    const double observed_dev = std::abs(out.statistic - expected);
    constexpr double kTol = 1e-9;

    if (n1 <= kExactRankSumLimit && n2 <= kExactRankSumLimit) {
        out.exact = true;
        // Walk every n1-subset of the pooled ranks.
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n1), true);
        std::size_t total = 0, extreme = 0;
        do {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) s += ranks[i];
            ++total;
            if (std::abs(s - expected) >= observed_dev - kTol) ++extreme;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        out.p_value = static_cast<double>(extreme) / static_cast<double>(total);
        return out;
    }

    // Tie correction: sum of (t^3 - t) over tie groups.
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double ties = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        const auto t = static_cast<double>(j - i + 1);
        ties += t * t * t - t;
        i = j + 1;
    }
    const double nd = static_cast<double>(n);
    const double var = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                       ((nd + 1.0) - ties / (nd * (nd - 1.0)));
    if (var <= 0.0) {
        out.p_value = 1.0;
        return out;
    }
    const double z = std::max(0.0, observed_dev - 0.5) / std::sqrt(var);
    out.p_value = std::min(1.0, 2.0 * detail::normal_sf(z));
    return out;
}

}  // namespace slsma::stats
