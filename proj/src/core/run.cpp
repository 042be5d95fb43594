#include <melita/core/run.hpp>

namespace melita {

RunRecord run(const Domain& domain, const RunConfig& config, Rng& rng, const StepObserver& observer)
{
    require(config.steps >= 0, "run: steps must be non-negative");
    require(config.snapshot_every >= 0, "run: snapshot_every must be non-negative");

    RunRecord record{.series = {}, .snapshots = {}, .archive = Archive(domain.axis_sizes()), .seeded_cells = 0, .outcomes = {}};
    record.seeded_cells = seed_archive(record.archive, domain, config.init_count, rng);
    record.series.reserve(static_cast<std::size_t>(config.steps));

    for (std::int64_t i = 1; i <= config.steps; ++i) {
        const auto step = static_cast<std::uint64_t>(i);
        const StepReport report = config.method == Method::melita
            ? melita_step(record.archive, domain, rng, config.selection, step, config.transverse)
            : vanilla_step(record.archive, domain, rng, config.selection, step);

        switch (report.outcome) {
        case StepOutcomeKind::inserted_empty: ++record.outcomes.inserted_empty; break;
        case StepOutcomeKind::replaced: ++record.outcomes.replaced; break;
        case StepOutcomeKind::rejected: ++record.outcomes.rejected; break;
        case StepOutcomeKind::offspring_invalid: ++record.outcomes.offspring_invalid; break;
        }
        record.outcomes.evaluations += report.evaluations;

        record.series.push_back(metrics::archive_metrics(record.archive, step));
        if (config.snapshot_every > 0 && i % config.snapshot_every == 0 && i != config.steps)
            record.snapshots.push_back({step, record.archive});
        if (observer)
            observer(report, record.archive);
    }
    return record;
}

} // namespace melita
