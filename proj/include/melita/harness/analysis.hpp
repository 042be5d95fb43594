#pragma once

#include <melita/core/archive.hpp>
#include <melita/metrics/diversity.hpp>
#include <melita/metrics/k_medoids.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace melita::harness {

/// Names accepted by make_distance: "euclidean" (vector and image payloads)
/// and "topic-posterior" (token text, Euclidean between topic posteriors).
std::vector<std::string> distance_names();

/// Distance between elites i and j of `elites` on one modality. Throws
/// std::invalid_argument for an unknown name (listing the valid ones) or a
/// payload the distance does not apply to.
metrics::PairwiseDistance make_distance(const std::vector<const Elite*>& elites, std::size_t modality,
                                        const std::string& name);

/// Default distance for a payload: euclidean for vectors/images,
/// topic-posterior for token text.
std::string default_distance(const Payload& payload);

struct DiversityAnalysis {
    std::vector<Coords> coords;
    metrics::DistanceReport report;
};

/// Throws std::runtime_error("no elites") on an empty archive.
DiversityAnalysis analyze_diversity(const Archive& archive, std::size_t modality, const std::string& distance);
nlohmann::json to_json(const DiversityAnalysis& analysis, std::size_t modality, const std::string& distance);

struct Exemplar {
    Coords coords;
    double fitness = 0.0;
    std::vector<Coords> members; // including the exemplar itself
};

struct MedoidAnalysis {
    std::vector<double> weights;
    std::vector<Exemplar> exemplars; // ordered by cell
    double cost = 0.0;
};

/// k-medoids over all elites with the combined distance
///   d(i, j) = sqrt(sum_m w_m * d_m(i, j)^2)
/// where d_m is the default distance of modality m. Empty `weights` means 1
/// for every modality. Throws std::runtime_error when k exceeds the elite count.
MedoidAnalysis medoids(const Archive& archive, std::size_t k, std::vector<double> weights, std::uint64_t seed);
nlohmann::json to_json(const MedoidAnalysis& analysis);

} // namespace melita::harness
