#include <melita/metrics/k_medoids.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace melita::metrics {

namespace {

struct Assignment {
    std::vector<std::size_t> labels;
    double cost = 0.0;
};

Assignment assign(const std::vector<double>& d, std::size_t n, const std::vector<std::size_t>& medoids)
{
    Assignment a;
    a.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < medoids.size(); ++m) {
            const double dist = d[i * n + medoids[m]];
            if (dist < best) {
                best = dist;
                a.labels[i] = m;
            }
        }
        a.cost += best;
    }
    return a;
}

} // namespace

Clustering k_medoids(std::size_t count, const PairwiseDistance& distance, std::size_t k, Rng& rng)
{
    require(k >= 1 && k <= count, "k_medoids: need 1 <= k <= item count");

    std::vector<double> d(count * count, 0.0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            d[i * count + j] = d[j * count + i] = distance(i, j);

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> medoids(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(medoids.begin(), medoids.end());

    Assignment current = assign(d, count, medoids);
    Clustering result;
    result.cost_history.push_back(current.cost);

    while (true) {
        double best_cost = current.cost;
        std::vector<std::size_t> best_medoids;
        for (std::size_t m = 0; m < k; ++m) {
            for (std::size_t h = 0; h < count; ++h) {
                if (std::find(medoids.begin(), medoids.end(), h) != medoids.end())
                    continue;
                auto trial = medoids;
                trial[m] = h;
                const double cost = assign(d, count, trial).cost;
                if (cost < best_cost - 1e-12) {
                    best_cost = cost;
                    best_medoids = std::move(trial);
                }
            }
        }
        if (best_medoids.empty())
            break;
        std::sort(best_medoids.begin(), best_medoids.end());
        medoids = std::move(best_medoids);
        current = assign(d, count, medoids);
        result.cost_history.push_back(current.cost);
    }

    result.medoids = std::move(medoids);
    result.labels = std::move(current.labels);
    result.cost = current.cost;
    return result;
}

} // namespace melita::metrics
