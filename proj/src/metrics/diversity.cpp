#include <melita/metrics/diversity.hpp>
#include <melita/core/types.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace melita::metrics {

DistanceReport diversity(std::size_t count, const PairwiseDistance& distance)
{
    DistanceReport report;
    if (count < 2) {
        report.single_elite = true;
        report.mean_distance.assign(count, 0.0);
        report.nearest_neighbour.assign(count, 0.0);
        return report;
    }

    std::vector<double> matrix(count * count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const double dij = distance(i, j);
            const double dji = distance(j, i);
            require(dij >= 0.0 && dji >= 0.0, "diversity: negative distance");
            require(std::abs(dij - dji) <= 1e-9 * std::max(1.0, std::abs(dij)), "diversity: asymmetric distance");
            matrix[i * count + j] = matrix[j * count + i] = dij;
        }
    }

    report.mean_distance.resize(count);
    report.nearest_neighbour.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        double sum = 0.0;
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i)
                continue;
            sum += matrix[i * count + j];
            nearest = std::min(nearest, matrix[i * count + j]);
        }
        report.mean_distance[i] = sum / static_cast<double>(count - 1);
        report.nearest_neighbour[i] = nearest;
        report.archive_mean_distance += report.mean_distance[i];
        report.archive_mean_nearest += nearest;
    }
    report.archive_mean_distance /= static_cast<double>(count);
    report.archive_mean_nearest /= static_cast<double>(count);
    return report;
}

} // namespace melita::metrics
