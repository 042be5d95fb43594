#pragma once

#include <span>

namespace melita::metrics {

struct RankSumResult {
    double u = 0.0;            // Mann-Whitney U of sample a
    double z = 0.0;            // continuity-corrected standard score, signed (a > b positive)
    double p_two_tail = 1.0;
    double p_greater = 1.0;    // one-sided: a tends to exceed b
    double p_less = 1.0;       // one-sided: a tends to fall below b
};

/// Wilcoxon rank-sum / Mann-Whitney U with midranks for ties, normal
/// approximation with tie and continuity corrections.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b);

} // namespace melita::metrics
