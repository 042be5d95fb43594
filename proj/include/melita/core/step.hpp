#pragma once

#include <melita/core/archive.hpp>
#include <melita/core/domain.hpp>
#include <melita/core/selection.hpp>

namespace melita {

enum class StepOutcomeKind { inserted_empty, replaced, rejected, offspring_invalid };

struct StepReport {
    Coords parent_coords;
    std::size_t mutated_modality = 0;
    std::size_t candidate_count = 0;
    std::size_t evaluations = 0;

    StepOutcomeKind outcome = StepOutcomeKind::rejected;
    Coords coords; // modified cell, empty unless inserted_empty or replaced
    double old_fitness = 0.0;
    double new_fitness = 0.0;

    bool modified() const
    {
        return outcome == StepOutcomeKind::inserted_empty || outcome == StepOutcomeKind::replaced;
    }
};

/// Offspring E' plus the modality that was varied.
struct Offspring {
    Solution solution;
    std::size_t modality = 0;
};

/// Pairs the new artefact with the remaining artefacts of every elite sharing
/// its bin on the mutated axis. Candidates payload-identical to the direct
/// offspring are dropped. Results are in ascending cell order.
std::vector<Solution> transverse_candidates(const Archive& archive, const Domain& domain,
                                            const Artefact& new_artefact, std::size_t bin,
                                            const Solution& parent);

/// Standard MAP-Elites cycle: the direct offspring competes for its own cell only.
StepReport vanilla_step(Archive& archive, const Domain& domain, Rng& rng,
                        const SelectionPolicy& policy, std::uint64_t step_index = 0);

/// MAP-Elites with transverse assessment. With `transverse` false the candidate
/// list holds only the direct offspring and the step degenerates to vanilla_step.
StepReport melita_step(Archive& archive, const Domain& domain, Rng& rng,
                       const SelectionPolicy& policy, std::uint64_t step_index = 0,
                       bool transverse = true);

/// Creates an empty-archive population of `count` generated individuals.
/// Returns the number of occupied cells afterwards.
std::size_t seed_archive(Archive& archive, const Domain& domain, std::size_t count, Rng& rng);

} // namespace melita
