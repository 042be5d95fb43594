#include <melita/domains/vector_pair.hpp>
#include <melita/domains/image_metrics.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace melita::domains {

namespace {

double norm(const std::vector<double>& x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

const RealVector& as_vector(const Artefact& a)
{
    const auto* v = std::get_if<RealVector>(&a.payload);
    require(v != nullptr, "vector-pair artefact must carry a real vector");
    require(v->values.size() == vp_dimension, "vector-pair artefact must have 8 components");
    for (double x : v->values)
        require(std::isfinite(x), "vector-pair artefact must be finite");
    return *v;
}

} // namespace

double vp_cohere(const RealVector& t, const RealVector& v)
{
    require(t.values.size() == v.values.size(), "vp_cohere: dimension mismatch");
    double dot = 0.0, tt = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        dot += t.values[i] * v.values[i];
        tt += t.values[i] * t.values[i];
        vv += v.values[i] * v.values[i];
    }
    require(tt > 0.0 && vv > 0.0, "vp_cohere: zero-norm input");
    // sqrt(x * x) == x exactly, so identical inputs score exactly 1.
    const double cosine = std::clamp(dot / std::sqrt(tt * vv), -1.0, 1.0);
    return (1.0 + cosine) / 2.0;
}

std::optional<std::size_t> vp_describe_text(const RealVector& t)
{
    require(t.values.size() >= 2, "vp_describe_text: need two components");
    if (t.values[0] == 0.0 && t.values[1] == 0.0)
        return std::nullopt;
    const double theta = std::atan2(t.values[1], t.values[0]);
    const auto sector = static_cast<std::size_t>(std::floor(16.0 * (theta + std::numbers::pi) / (2.0 * std::numbers::pi)));
    return std::min<std::size_t>(15, sector);
}

std::size_t vp_describe_visual(const RealVector& v)
{
    require(v.values.size() >= 2, "vp_describe_visual: need two components");
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < v.values.size(); ++i)
        rough += std::abs(v.values[i + 1] - v.values[i]);
    rough /= static_cast<double>(v.values.size() - 1);
    return static_cast<std::size_t>(4 * bin4(norm(v.values), vp_norm_thresholds) + bin4(rough, vp_roughness_thresholds));
}

VectorPairDomain::VectorPairDomain(VectorPairParams params) : params_(params)
{
    require(params_.sigma >= 0.0, "vector-pair sigma must be non-negative");
    require(params_.full_mutation_rate >= 0.0 && params_.full_mutation_rate <= 1.0,
            "full mutation rate must lie in [0,1]");
    require(params_.theme_scale >= 0.0, "theme scale must be non-negative");

    Rng theme_rng(params_.domain_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& theme : themes_) {
        theme.values.resize(vp_dimension);
        for (auto& x : theme.values)
            x = params_.theme_scale * gauss(theme_rng);
    }
}

RealVector VectorPairDomain::sample(std::size_t modality, Rng& rng) const
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealVector out{std::vector<double>(vp_dimension)};
    do {
        for (std::size_t i = 0; i < vp_dimension; ++i)
            out.values[i] = themes_[modality].values[i] + gauss(rng);
    } while (norm(out.values) < 1e-9);
    return out;
}

std::vector<Artefact> VectorPairDomain::generate(Rng& rng) const
{
    std::vector<Artefact> out;
    out.push_back({0, sample(0, rng)});
    out.push_back({1, sample(1, rng)});
    return out;
}

std::optional<Artefact> VectorPairDomain::vary(std::size_t modality, const Solution& parent, Rng& rng) const
{
    require(modality < 2, "vector-pair has two modalities");
    std::bernoulli_distribution full(params_.full_mutation_rate);
    if (full(rng))
        return Artefact{modality, sample(modality, rng)};

    RealVector child = as_vector(parent.artefacts.at(modality));
    if (params_.sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, params_.sigma);
        for (auto& x : child.values)
            x += noise(rng);
    }
    if (norm(child.values) < 1e-9)
        return std::nullopt;
    return Artefact{modality, std::move(child)};
}

std::optional<std::size_t> VectorPairDomain::describe(std::size_t modality, const Artefact& artefact) const
{
    require(modality < 2 && artefact.modality == modality, "vector-pair describe: modality mismatch");
    const RealVector& v = as_vector(artefact);
    if (modality == 0)
        return vp_describe_text(v);
    return vp_describe_visual(v);
}

double VectorPairDomain::cohere(std::span<const Artefact> artefacts) const
{
    require(artefacts.size() == 2, "vector-pair cohere: need two artefacts");
    return vp_cohere(as_vector(artefacts[0]), as_vector(artefacts[1]));
}

} // namespace melita::domains
