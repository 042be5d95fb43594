#include <melita/harness/analysis.hpp>

#include <melita/domains/topic_model.hpp>

#include <cmath>
#include <stdexcept>

namespace melita::harness {

using nlohmann::json;

namespace {

const char* payload_kind(const Payload& p)
{
    switch (p.index()) {
    case 0: return "vector";
    case 1: return "image";
    default: return "tokens";
    }
}

double euclidean(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("euclidean: payload sizes differ (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sum);
}

std::span<const double> numeric(const Payload& p)
{
    if (const auto* v = std::get_if<RealVector>(&p))
        return v->values;
    return std::get<Image>(p).rgb;
}

std::string available()
{
    std::string out;
    for (const auto& n : distance_names())
        out += (out.empty() ? "" : ", ") + n;
    return out;
}

} // namespace

std::vector<std::string> distance_names()
{
    return {"euclidean", "topic-posterior"};
}

std::string default_distance(const Payload& payload)
{
    return std::holds_alternative<TokenText>(payload) ? "topic-posterior" : "euclidean";
}

metrics::PairwiseDistance make_distance(const std::vector<const Elite*>& elites, std::size_t modality,
                                        const std::string& name)
{
    std::vector<const Payload*> payloads;
    for (const Elite* e : elites) {
        if (modality >= e->solution.artefacts.size())
            throw std::invalid_argument("modality " + std::to_string(modality) + " out of range");
        payloads.push_back(&e->solution.artefacts[modality].payload);
    }

    if (name == "euclidean") {
        for (const Payload* p : payloads)
            if (std::holds_alternative<TokenText>(*p))
                throw std::invalid_argument("distance 'euclidean' does not apply to token payloads; use topic-posterior");
        return [payloads](std::size_t i, std::size_t j) { return euclidean(numeric(*payloads[i]), numeric(*payloads[j])); };
    }
    if (name == "topic-posterior") {
        static const domains::TopicModel model;
        std::vector<std::vector<double>> posteriors;
        for (const Payload* p : payloads) {
            const auto* text = std::get_if<TokenText>(p);
            if (!text)
                throw std::invalid_argument(std::string("distance 'topic-posterior' does not apply to ") +
                                            payload_kind(*p) + " payloads");
            if (text->tokens.empty())
                throw std::invalid_argument("distance 'topic-posterior': empty token sequence");
            const auto post = model.posterior(text->tokens);
            posteriors.emplace_back(post.begin(), post.end());
        }
        return [posteriors = std::move(posteriors)](std::size_t i, std::size_t j) {
            return euclidean(posteriors[i], posteriors[j]);
        };
    }
    throw std::invalid_argument("unknown distance '" + name + "' (available: " + available() + ")");
}

DiversityAnalysis analyze_diversity(const Archive& archive, std::size_t modality, const std::string& distance)
{
    const auto elites = archive.elites();
    if (elites.empty())
        throw std::runtime_error("no elites");
    DiversityAnalysis out;
    for (const Elite* e : elites)
        out.coords.push_back(e->solution.coords);
    out.report = metrics::diversity(elites.size(), make_distance(elites, modality, distance));
    return out;
}

json to_json(const DiversityAnalysis& analysis, std::size_t modality, const std::string& distance)
{
    json elites = json::array();
    for (std::size_t i = 0; i < analysis.coords.size(); ++i)
        elites.push_back({{"coords", analysis.coords[i]},
                          {"mean_distance", analysis.report.mean_distance[i]},
                          {"nearest_neighbour", analysis.report.nearest_neighbour[i]}});
    return {{"modality", modality},
            {"distance", distance},
            {"elite_count", analysis.coords.size()},
            {"single_elite", analysis.report.single_elite},
            {"archive_mean_distance", analysis.report.archive_mean_distance},
            {"archive_mean_nearest", analysis.report.archive_mean_nearest},
            {"elites", elites}};
}

MedoidAnalysis medoids(const Archive& archive, std::size_t k, std::vector<double> weights, std::uint64_t seed)
{
    const auto elites = archive.elites();
    if (elites.empty())
        throw std::runtime_error("no elites");
    if (k == 0 || k > elites.size())
        throw std::runtime_error("k = " + std::to_string(k) + " must be between 1 and the elite count (" +
                                 std::to_string(elites.size()) + ")");
    const std::size_t modalities = archive.dimensions();
    if (weights.empty())
        weights.assign(modalities, 1.0);
    if (weights.size() != modalities)
        throw std::runtime_error("expected " + std::to_string(modalities) + " weights, got " +
                                 std::to_string(weights.size()));
    for (double w : weights)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::runtime_error("weights must be finite and non-negative");

    // precompute the combined matrix; per-modality distances may be costly
    const std::size_t n = elites.size();
    std::vector<double> matrix(n * n, 0.0);
    for (std::size_t m = 0; m < modalities; ++m) {
        if (weights[m] == 0.0)
            continue;
        const auto d = make_distance(elites, m, default_distance(elites.front()->solution.artefacts[m].payload));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double v = d(i, j);
                matrix[i * n + j] += weights[m] * v * v;
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            matrix[j * n + i] = matrix[i * n + j] = std::sqrt(matrix[i * n + j]);

    Rng rng(seed);
    const auto clustering =
        metrics::k_medoids(n, [&](std::size_t i, std::size_t j) { return matrix[i * n + j]; }, k, rng);

    MedoidAnalysis out;
    out.weights = std::move(weights);
    out.cost = clustering.cost;
    for (std::size_t med : clustering.medoids)
        out.exemplars.push_back({elites[med]->solution.coords, elites[med]->solution.fitness, {}});
    for (std::size_t i = 0; i < n; ++i)
        out.exemplars[clustering.labels[i]].members.push_back(elites[i]->solution.coords);
    return out;
}

json to_json(const MedoidAnalysis& analysis)
{
    json exemplars = json::array();
    for (const auto& e : analysis.exemplars)
        exemplars.push_back({{"coords", e.coords},
                             {"fitness", e.fitness},
                             {"cluster_size", e.members.size()},
                             {"members", e.members}});
    return {{"k", analysis.exemplars.size()},
            {"weights", analysis.weights},
            {"cost", analysis.cost},
            {"exemplars", exemplars}};
}

} // namespace melita::harness
