#include <melita/core/step.hpp>

#include <algorithm>

namespace melita {

namespace {

double checked_coherence(const Domain& domain, std::span<const Artefact> artefacts)
{
    const double q = domain.cohere(artefacts);
    require(q >= 0.0 && q <= 1.0, "coherence outside [0,1]");
    return q;
}

bool same_except(const std::vector<Artefact>& a, const std::vector<Artefact>& b, std::size_t skip)
{
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != skip && !(a[j] == b[j]))
            return false;
    return true;
}

// Selection, modality pick and variation shared by both step kinds. Returns
// nullopt when the offspring is invalid; the report is filled in either case.
std::optional<Offspring> make_offspring(Archive& archive, const Domain& domain, Rng& rng,
                                        const SelectionPolicy& policy, StepReport& report)
{
    report.parent_coords = select_parent(archive, rng, policy);
    const Solution& parent = archive.find(report.parent_coords)->solution;

    std::uniform_int_distribution<std::size_t> pick(0, domain.modality_count() - 1);
    const std::size_t m = pick(rng);
    report.mutated_modality = m;

    auto artefact = domain.vary(m, parent, rng);
    if (!artefact) {
        report.outcome = StepOutcomeKind::offspring_invalid;
        return std::nullopt;
    }
    require(artefact->modality == m, "vary returned an artefact of the wrong modality");

    auto bin = domain.describe(m, *artefact);
    if (!bin) {
        report.outcome = StepOutcomeKind::offspring_invalid;
        return std::nullopt;
    }
    require(*bin < archive.axis_sizes()[m], "describe returned a bin outside the axis");

    Offspring child{parent, m};
    child.solution.artefacts[m] = std::move(*artefact);
    child.solution.coords[m] = *bin;
    child.solution.fitness = checked_coherence(domain, child.solution.artefacts);
    return child;
}

void apply_outcome(Archive& archive, const InsertOutcome& inserted, StepReport& report)
{
    switch (inserted.kind) {
    case InsertOutcome::Kind::inserted_empty:
        report.outcome = StepOutcomeKind::inserted_empty;
        break;
    case InsertOutcome::Kind::replaced:
        report.outcome = StepOutcomeKind::replaced;
        break;
    case InsertOutcome::Kind::rejected:
        report.outcome = StepOutcomeKind::rejected;
        return;
    }
    report.coords = inserted.coords;
    report.old_fitness = inserted.old_fitness;
    report.new_fitness = inserted.new_fitness;
    // A parent evicted by its own offspring takes its counters with it.
    if (inserted.coords != report.parent_coords)
        archive.record_success(report.parent_coords);
}

} // namespace

std::vector<Solution> transverse_candidates(const Archive& archive, const Domain& domain,
                                            const Artefact& new_artefact, std::size_t bin,
                                            const Solution& parent)
{
    const std::size_t m = new_artefact.modality;
    require(m < archive.dimensions(), "artefact modality outside the archive");
    require(bin < archive.axis_sizes()[m], "bin outside the mutated axis");

    std::vector<Solution> out;
    for (const Elite* elite : archive.elites()) {
        const Solution& row_member = elite->solution;
        if (row_member.coords[m] != bin)
            continue;
        if (same_except(row_member.artefacts, parent.artefacts, m))
            continue; // would duplicate the direct offspring
        Solution candidate = row_member;
        candidate.artefacts[m] = new_artefact;
        candidate.fitness = checked_coherence(domain, candidate.artefacts);
        out.push_back(std::move(candidate));
    }
    return out;
}

StepReport vanilla_step(Archive& archive, const Domain& domain, Rng& rng,
                        const SelectionPolicy& policy, std::uint64_t step_index)
{
    StepReport report;
    auto child = make_offspring(archive, domain, rng, policy, report);
    if (!child)
        return report;
    report.candidate_count = 1;
    report.evaluations = 1;
    apply_outcome(archive, archive.insert(std::move(child->solution), step_index), report);
    return report;
}

StepReport melita_step(Archive& archive, const Domain& domain, Rng& rng,
                       const SelectionPolicy& policy, std::uint64_t step_index, bool transverse)
{
    StepReport report;
    auto child = make_offspring(archive, domain, rng, policy, report);
    if (!child)
        return report;

    struct Entry {
        Solution solution;
        bool direct;
    };
    std::vector<Entry> ordered;
    if (transverse) {
        const Solution& parent = archive.find(report.parent_coords)->solution;
        const std::size_t m = child->modality;
        for (auto& s : transverse_candidates(archive, domain, child->solution.artefacts[m],
                                             child->solution.coords[m], parent))
            ordered.push_back({std::move(s), false});
    }
    ordered.push_back({std::move(child->solution), true});

    std::sort(ordered.begin(), ordered.end(), [](const Entry& a, const Entry& b) {
        if (a.solution.fitness != b.solution.fitness)
            return a.solution.fitness > b.solution.fitness;
        if (a.direct != b.direct)
            return a.direct;
        return a.solution.coords < b.solution.coords;
    });

    report.candidate_count = ordered.size();
    report.evaluations = ordered.size();
    report.outcome = StepOutcomeKind::rejected;
    for (auto& entry : ordered) {
        const Elite* occupant = archive.find(entry.solution.coords);
        if (occupant && !(occupant->solution.fitness < entry.solution.fitness))
            continue;
        apply_outcome(archive, archive.insert(std::move(entry.solution), step_index), report);
        break;
    }
    return report;
}

std::size_t seed_archive(Archive& archive, const Domain& domain, std::size_t count, Rng& rng)
{
    require(archive.empty(), "seed_archive expects an empty archive");
    for (std::size_t i = 0; i < count; ++i) {
        auto solution = characterize(domain, domain.generate(rng));
        if (!solution)
            continue;
        require(solution->fitness >= 0.0 && solution->fitness <= 1.0, "coherence outside [0,1]");
        archive.insert(std::move(*solution), 0);
    }
    return archive.size();
}

} // namespace melita
