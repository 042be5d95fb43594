#include <melita/domains/topic_model.hpp>

#include <algorithm>
#include <cmath>

namespace melita::domains {

namespace {
// Posteriors closer than this are treated as tied. Equal token counts can sum
// their log-likelihood terms in different orders and drift by a few ulps.
constexpr double tie_tolerance = 1e-12;
} // namespace

TopicModel::TopicModel()
{
    for (std::size_t k = 0; k < topic_count; ++k) {
        for (std::size_t v = 0; v < vocabulary_size; ++v) {
            const bool preferred = v / 4 == k;
            rows_[k][v] = preferred ? preferred_probability : background_probability;
            log_rows_[k][v] = std::log(rows_[k][v]);
        }
    }
}

double TopicModel::probability(std::size_t topic, int token) const
{
    require(topic < topic_count, "topic index out of range");
    require(token >= 0 && static_cast<std::size_t>(token) < vocabulary_size, "token id out of range");
    return rows_[topic][static_cast<std::size_t>(token)];
}

std::array<double, TopicModel::topic_count> TopicModel::posterior(std::span<const int> tokens) const
{
    require(!tokens.empty(), "posterior of an empty text");
    std::array<std::size_t, vocabulary_size> counts{};
    for (int t : tokens) {
        require(t >= 0 && static_cast<std::size_t>(t) < vocabulary_size, "token id out of range");
        ++counts[static_cast<std::size_t>(t)];
    }

    std::array<double, topic_count> log_lik{};
    for (std::size_t k = 0; k < topic_count; ++k)
        for (std::size_t v = 0; v < vocabulary_size; ++v)
            if (counts[v])
                log_lik[k] += static_cast<double>(counts[v]) * log_rows_[k][v];

    const double peak = *std::max_element(log_lik.begin(), log_lik.end());
    std::array<double, topic_count> post{};
    double total = 0.0;
    for (std::size_t k = 0; k < topic_count; ++k) {
        post[k] = std::exp(log_lik[k] - peak);
        total += post[k];
    }
    for (auto& p : post)
        p /= total;
    return post;
}

std::optional<std::size_t> TopicModel::classify(std::span<const int> tokens, double threshold) const
{
    const auto post = posterior(tokens);
    const std::size_t best = static_cast<std::size_t>(std::max_element(post.begin(), post.end()) - post.begin());
    for (std::size_t k = 0; k < topic_count; ++k)
        if (k != best && post[best] - post[k] <= tie_tolerance)
            return std::nullopt;
    if (post[best] < threshold)
        return std::nullopt;
    return best;
}

std::size_t TopicModel::top_topic(std::span<const int> tokens) const
{
    const auto post = posterior(tokens);
    return static_cast<std::size_t>(std::max_element(post.begin(), post.end()) - post.begin());
}

int TopicModel::sample_token(std::size_t topic, Rng& rng) const
{
    require(topic < topic_count, "topic index out of range");
    std::discrete_distribution<int> dist(rows_[topic].begin(), rows_[topic].end());
    return dist(rng);
}

} // namespace melita::domains
