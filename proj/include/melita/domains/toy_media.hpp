#pragma once

#include <melita/core/domain.hpp>
#include <melita/domains/topic_model.hpp>

#include <array>

namespace melita::domains {

/// Synthetic text (modality 0, token sequences) and cover image (modality 1,
/// RGB pixel grid) with closed-form characterisation and coherence.
struct ToyMediaParams {
    std::size_t image_size = 32;      // square images
    double noise_sigma = 0.1;         // stage-one pixel noise of image mutation
    double full_mutation_rate = 0.2;  // text only
    std::uint64_t domain_seed = 0;    // drives per-label topic and palette bias
};

inline constexpr std::size_t min_text_length = 8;
inline constexpr std::size_t max_text_length = 64;
inline constexpr std::array<double, 3> complexity_thresholds{0.05, 0.15, 0.30};
inline constexpr std::array<double, 3> colourfulness_thresholds{20.0, 40.0, 60.0};
inline constexpr std::size_t image_statistic_count = 16;

using CoherenceMatrix = std::array<std::array<double, image_statistic_count>, TopicModel::topic_count>;

/// Fixed projection from image statistics into topic space. Entries are
/// 2u - 1 for successive SplitMix64 outputs u = (x >> 11) * 2^-53, seed
/// 0x4D454C495441, filled row-major.
const CoherenceMatrix& coherence_matrix();
inline constexpr std::uint64_t coherence_matrix_seed = 0x4D454C495441ULL;

/// 4 * bin4(edge complexity) + bin4(colourfulness).
std::size_t toy_describe_image(const Image& img);

std::optional<std::size_t> toy_classify_text(const TokenText& text, const TopicModel& model);

/// Image embedding, in order:
///   [0..3]   mean luminance per quadrant (top-left, top-right, bottom-left, bottom-right)
///   [4..7]   edge fraction of interior pixels per quadrant, same order
///   [8..10]  mean R, G, B
///   [11]     min(colourfulness / 300, 1)
///   [12]     global edge complexity
///   [13]     population std-dev of luminance
///   [14]     mean |L(x+1,y) - L(x,y)|
///   [15]     mean |L(x,y+1) - L(x,y)|
std::array<double, image_statistic_count> image_statistics(const Image& img);

struct Coherence {
    double value = 0.5;
    bool degenerate = false; // a zero embedding forced the neutral 0.5
};

/// (1 + cos(M * image_statistics(img), posterior(text))) / 2.
Coherence toy_cohere_detailed(const Image& img, const TokenText& text, const TopicModel& model);
double toy_cohere(const Image& img, const TokenText& text, const TopicModel& model);

/// Partial (keep a prefix cut in the middle third, refill from the parent's top
/// topic to the same length) or, with probability `full_rate`, full regeneration.
TokenText toy_vary_text(const TokenText& parent, const TopicModel& model, double full_rate, Rng& rng);

/// Additive Gaussian noise clamped to [0,1], then a 3x3 box blur.
Image toy_vary_image(const Image& parent, double sigma, Rng& rng);

TokenText generate_text(std::size_t topic, const TopicModel& model, Rng& rng);

class ToyMediaDomain final : public Domain {
public:
    explicit ToyMediaDomain(ToyMediaParams params = {});

    std::string_view name() const override { return "toy-media"; }
    std::size_t modality_count() const override { return 2; }
    std::vector<std::size_t> axis_sizes() const override { return {TopicModel::topic_count, 16}; }

    std::vector<Artefact> generate(Rng& rng) const override;
    std::optional<Artefact> vary(std::size_t modality, const Solution& parent, Rng& rng) const override;
    std::optional<std::size_t> describe(std::size_t modality, const Artefact& artefact) const override;
    double cohere(std::span<const Artefact> artefacts) const override;

    const ToyMediaParams& params() const { return params_; }
    const TopicModel& topic_model() const { return model_; }

    Image generate_image(Rng& rng) const;

private:
    ToyMediaParams params_;
    TopicModel model_;
    std::array<double, TopicModel::topic_count> topic_weights_{};
    std::array<double, 3> palette_{};
};

} // namespace melita::domains
