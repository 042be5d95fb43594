#pragma once

#include <melita/core/types.hpp>

#include <array>
#include <optional>
#include <span>

namespace melita::domains {

/// Fixed synthetic topic model over a 64-token vocabulary.
///
/// Topic k prefers tokens 4k..4k+3 (0.2 each, 0.8 in total); the other 60
/// tokens share the remaining 0.2 uniformly. The topic prior is uniform.
class TopicModel {
public:
    static constexpr std::size_t topic_count = 16;
    static constexpr std::size_t vocabulary_size = 64;
    static constexpr double preferred_probability = 0.2;
    static constexpr double background_probability = 0.2 / 60.0;
    static constexpr double default_threshold = 0.40;

    TopicModel();

    double probability(std::size_t topic, int token) const;
    const std::array<double, vocabulary_size>& row(std::size_t topic) const { return rows_[topic]; }

    /// Normalised posterior over topics for a non-empty token sequence.
    std::array<double, topic_count> posterior(std::span<const int> tokens) const;

    /// Argmax topic if its posterior is at least `threshold` and it is the
    /// unique maximum; otherwise unclassified.
    std::optional<std::size_t> classify(std::span<const int> tokens, double threshold = default_threshold) const;

    /// Topic with the highest posterior, lowest index on ties.
    std::size_t top_topic(std::span<const int> tokens) const;

    int sample_token(std::size_t topic, Rng& rng) const;

private:
    std::array<std::array<double, vocabulary_size>, topic_count> rows_{};
    std::array<std::array<double, vocabulary_size>, topic_count> log_rows_{};
};

} // namespace melita::domains
