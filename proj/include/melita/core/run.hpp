#pragma once

#include <melita/core/step.hpp>
#include <melita/metrics/archive_metrics.hpp>

#include <functional>

namespace melita {

enum class Method { mapelites, melita };

struct RunConfig {
    Method method = Method::melita;
    SelectionPolicy selection{};
    std::size_t init_count = 100;
    std::int64_t steps = 2000;
    std::int64_t snapshot_every = 0; // 0 = final archive only
    bool transverse = true;          // melita only; false reduces to vanilla
};

struct Snapshot {
    std::uint64_t step = 0;
    Archive archive;
};

struct OutcomeCounts {
    std::uint64_t inserted_empty = 0;
    std::uint64_t replaced = 0;
    std::uint64_t rejected = 0;
    std::uint64_t offspring_invalid = 0;
    std::uint64_t evaluations = 0;

    bool operator==(const OutcomeCounts&) const = default;
};

struct RunRecord {
    std::vector<metrics::MetricsSample> series; // one per selection
    std::vector<Snapshot> snapshots;
    Archive archive;
    std::size_t seeded_cells = 0;
    OutcomeCounts outcomes;
};

/// Called after every step with the report and the archive state after it.
using StepObserver = std::function<void(const StepReport&, const Archive&)>;

/// Seeds an archive sized to the domain, then runs `steps` parent selections.
RunRecord run(const Domain& domain, const RunConfig& config, Rng& rng, const StepObserver& observer = {});

} // namespace melita
