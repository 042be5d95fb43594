#pragma once

#include <melita/core/types.hpp>
#include <melita/metrics/diversity.hpp>

namespace melita::metrics {

struct Clustering {
    std::vector<std::size_t> medoids;   // item indices, ascending
    std::vector<std::size_t> labels;    // per item: position in `medoids`
    double cost = 0.0;                  // sum of distances to assigned medoid
    std::vector<double> cost_history;   // after initialisation and every accepted swap
};

/// PAM: random initial medoids drawn from rng, then repeatedly apply the single
/// best cost-reducing (medoid, non-medoid) swap until none remains.
Clustering k_medoids(std::size_t count, const PairwiseDistance& distance, std::size_t k, Rng& rng);

} // namespace melita::metrics
