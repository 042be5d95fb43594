#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace melita::metrics {

/// Symmetric, non-negative pairwise distance between items i and j.
using PairwiseDistance = std::function<double(std::size_t, std::size_t)>;

struct DistanceReport {
    std::vector<double> mean_distance;     // per elite, over all other elites
    std::vector<double> nearest_neighbour; // per elite
    double archive_mean_distance = 0.0;
    double archive_mean_nearest = 0.0;
    bool single_elite = false; // fewer than two elites; everything reported as 0
};

/// Mean and nearest-neighbour distance of every item to all others. Throws
/// ContractViolation when the distance is negative or asymmetric.
DistanceReport diversity(std::size_t count, const PairwiseDistance& distance);

} // namespace melita::metrics
