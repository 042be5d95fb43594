#include <melita/metrics/archive_metrics.hpp>

#include <algorithm>
#include <numeric>

namespace melita::metrics {

MetricsSample archive_metrics(const Archive& archive, std::uint64_t step)
{
    MetricsSample sample;
    sample.step = step;
    const auto elites = archive.elites();
    if (elites.empty())
        return sample;

    for (const Elite* e : elites) {
        sample.qd_score += e->solution.fitness;
        sample.max_fitness = std::max(sample.max_fitness, e->solution.fitness);
    }
    sample.coverage = static_cast<double>(elites.size()) / static_cast<double>(archive.cell_count());
    sample.mean_fitness = sample.qd_score / static_cast<double>(elites.size());
    return sample;
}

double auc(std::span<const double> series)
{
    return std::accumulate(series.begin(), series.end(), 0.0);
}

} // namespace melita::metrics
