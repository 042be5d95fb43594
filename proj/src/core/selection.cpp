#include <melita/core/selection.hpp>

#include <cmath>
#include <limits>

namespace melita {

Coords select_uniform(Archive& archive, Rng& rng)
{
    if (archive.empty())
        throw NoElites();
    const auto occupied = archive.occupied_indices();
    std::uniform_int_distribution<std::size_t> pick(0, occupied.size() - 1);
    Coords coords = archive.coords_of(occupied[pick(rng)]);
    archive.record_selection(coords);
    return coords;
}

double ucb_score(const CellStats& stats, std::uint64_t total_selections, double c)
{
    if (stats.times_selected == 0)
        return std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(stats.times_selected);
    const double success = static_cast<double>(stats.offspring_inserted) / n;
    const double t = static_cast<double>(std::max<std::uint64_t>(1, total_selections));
    return success + c * std::sqrt(2.0 * std::log(t) / n);
}

Coords select_ucb(Archive& archive, Rng& rng, double c)
{
    if (archive.empty())
        throw NoElites();

    const auto occupied = archive.occupied_indices();
    std::vector<std::size_t> best;
    double best_score = -std::numeric_limits<double>::infinity();
    for (auto index : occupied) {
        const double score = ucb_score(archive.stats(archive.coords_of(index)), archive.total_selections(), c);
        if (score > best_score) {
            best_score = score;
            best.assign(1, index);
        } else if (score == best_score) {
            best.push_back(index);
        }
    }

    std::size_t chosen = best.front();
    if (best.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
        chosen = best[pick(rng)];
    }
    Coords coords = archive.coords_of(chosen);
    archive.record_selection(coords);
    return coords;
}

Coords select_parent(Archive& archive, Rng& rng, const SelectionPolicy& policy)
{
    switch (policy.kind) {
    case SelectionKind::uniform:
        return select_uniform(archive, rng);
    case SelectionKind::ucb:
        return select_ucb(archive, rng, policy.ucb_c);
    }
    throw ContractViolation("unknown selection policy");
}

} // namespace melita
