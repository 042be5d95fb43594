#pragma once

#include <melita/core/archive.hpp>

#include <span>

namespace melita::metrics {

struct MetricsSample {
    std::uint64_t step = 0;
    double coverage = 0.0;
    double mean_fitness = 0.0;
    double max_fitness = 0.0;
    double qd_score = 0.0;

    bool operator==(const MetricsSample&) const = default;
};

/// Coverage, mean/max fitness and QD score. An empty archive reports zeros.
MetricsSample archive_metrics(const Archive& archive, std::uint64_t step = 0);

/// Left Riemann sum with unit step.
double auc(std::span<const double> series);

} // namespace melita::metrics
