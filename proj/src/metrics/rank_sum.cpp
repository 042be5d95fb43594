#include <melita/metrics/rank_sum.hpp>
#include <melita/core/types.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace melita::metrics {

namespace {

double upper_tail(double z)
{
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b)
{
    require(!a.empty() && !b.empty(), "rank_sum_test: both samples must be non-empty");
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;

    std::vector<std::pair<double, bool>> pooled; // value, from a
    pooled.reserve(n);
    for (double x : a)
        pooled.emplace_back(x, true);
    for (double x : b)
        pooled.emplace_back(x, false);
    std::sort(pooled.begin(), pooled.end(), [](const auto& l, const auto& r) { return l.first < r.first; });

    double rank_sum_a = 0.0;
    double tie_term = 0.0; // sum of t^3 - t over tie groups
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first)
            ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        for (std::size_t k = i; k < j; ++k)
            if (pooled[k].second)
                rank_sum_a += midrank;
        i = j;
    }

    const double dn1 = static_cast<double>(n1), dn2 = static_cast<double>(n2), dn = static_cast<double>(n);
    RankSumResult r;
    r.u = rank_sum_a - dn1 * (dn1 + 1.0) / 2.0;
    const double mu = dn1 * dn2 / 2.0;
    double variance = dn1 * dn2 / 12.0 * (dn + 1.0);
    if (n > 1)
        variance -= dn1 * dn2 / 12.0 * tie_term / (dn * (dn - 1.0));
    if (variance <= 0.0)
        return r; // all values tied: no evidence either way

    const double sigma = std::sqrt(variance);
    const double diff = r.u - mu;
    const double corrected = std::max(0.0, std::abs(diff) - 0.5);
    r.z = std::copysign(corrected / sigma, diff);
    r.p_two_tail = std::min(1.0, 2.0 * upper_tail(corrected / sigma));
    r.p_greater = upper_tail((diff - 0.5) / sigma);
    r.p_less = upper_tail((-diff - 0.5) / sigma);
    return r;
}

} // namespace melita::metrics
