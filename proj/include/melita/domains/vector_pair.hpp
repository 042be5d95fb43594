#pragma once

#include <melita/core/domain.hpp>

#include <array>

namespace melita::domains {

/// Two 8-dimensional real vectors standing in for a text embedding (modality 0)
/// and a visual embedding (modality 1). Small enough to check by hand.
struct VectorPairParams {
    double sigma = 0.3;              // partial mutation noise per component
    double full_mutation_rate = 0.2;
    std::uint64_t domain_seed = 0;   // drives the per-label theme offsets
    double theme_scale = 0.5;        // std-dev of theme offsets; 0 disables
};

inline constexpr std::size_t vp_dimension = 8;
inline constexpr std::array<double, 3> vp_norm_thresholds{1.0, 2.0, 3.0};
inline constexpr std::array<double, 3> vp_roughness_thresholds{0.5, 1.0, 1.5};

/// (1 + cos(t, v)) / 2. Both vectors need a non-zero norm.
double vp_cohere(const RealVector& t, const RealVector& v);

/// Angle of (t[0], t[1]) split into 16 sectors; unclassified at the origin.
std::optional<std::size_t> vp_describe_text(const RealVector& t);

/// 4 * bin4(norm) + bin4(mean |v[i+1] - v[i]|).
std::size_t vp_describe_visual(const RealVector& v);

class VectorPairDomain final : public Domain {
public:
    explicit VectorPairDomain(VectorPairParams params = {});

    std::string_view name() const override { return "vector-pair"; }
    std::size_t modality_count() const override { return 2; }
    std::vector<std::size_t> axis_sizes() const override { return {16, 16}; }

    std::vector<Artefact> generate(Rng& rng) const override;
    std::optional<Artefact> vary(std::size_t modality, const Solution& parent, Rng& rng) const override;
    std::optional<std::size_t> describe(std::size_t modality, const Artefact& artefact) const override;
    double cohere(std::span<const Artefact> artefacts) const override;

    const VectorPairParams& params() const { return params_; }
    const RealVector& theme(std::size_t modality) const { return themes_.at(modality); }

    /// One fresh vector for `modality`; re-drawn while its norm is below 1e-9.
    RealVector sample(std::size_t modality, Rng& rng) const;

private:
    VectorPairParams params_;
    std::array<RealVector, 2> themes_;
};

} // namespace melita::domains
