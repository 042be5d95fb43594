#pragma once

#include <melita/core/types.hpp>

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace melita {

/// Pluggable problem definition: how artefacts are created, varied, binned and scored.
///
/// describe() and cohere() must be pure. vary(m, ...) must only return artefacts of
/// modality m. Returning std::nullopt from vary() or describe() marks the offspring
/// invalid (death penalty); it is never inserted.
class Domain {
public:
    virtual ~Domain() = default;

    virtual std::string_view name() const = 0;
    virtual std::size_t modality_count() const = 0;
    virtual std::vector<std::size_t> axis_sizes() const = 0;

    /// One artefact per modality, ordered by modality index.
    virtual std::vector<Artefact> generate(Rng& rng) const = 0;
    virtual std::optional<Artefact> vary(std::size_t modality, const Solution& parent, Rng& rng) const = 0;
    virtual std::optional<std::size_t> describe(std::size_t modality, const Artefact& artefact) const = 0;
    /// Coherence between all modalities, in [0,1].
    virtual double cohere(std::span<const Artefact> artefacts) const = 0;
};

/// Builds a Solution with fresh fitness and coordinates, or nullopt if any
/// modality is unclassified.
std::optional<Solution> characterize(const Domain& domain, std::vector<Artefact> artefacts);

} // namespace melita
