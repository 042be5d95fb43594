#include <melita/core/archive.hpp>
#include <melita/core/domain.hpp>

#include <cmath>

namespace melita {

std::optional<Solution> characterize(const Domain& domain, std::vector<Artefact> artefacts)
{
    const std::size_t n = domain.modality_count();
    require(artefacts.size() == n, "characterize: expected one artefact per modality");
    for (std::size_t i = 0; i < n; ++i)
        require(artefacts[i].modality == i, "characterize: artefacts must be ordered by modality");

    Solution solution;
    solution.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto bin = domain.describe(i, artefacts[i]);
        if (!bin)
            return std::nullopt;
        solution.coords[i] = *bin;
    }
    solution.fitness = domain.cohere(artefacts);
    solution.artefacts = std::move(artefacts);
    return solution;
}

Archive::Archive(std::vector<std::size_t> axis_sizes) : axis_sizes_(std::move(axis_sizes))
{
    require(!axis_sizes_.empty(), "archive needs at least one axis");
    std::size_t total = 1;
    for (auto s : axis_sizes_) {
        require(s > 0, "axis sizes must be positive");
        total *= s;
    }
    cells_.resize(total);
    stats_.resize(total);
}

bool Archive::contains(std::span<const std::size_t> coords) const
{
    if (coords.size() != axis_sizes_.size())
        return false;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] >= axis_sizes_[i])
            return false;
    return true;
}

std::size_t Archive::linear_index(std::span<const std::size_t> coords) const
{
    require(contains(coords), "coordinates outside the archive");
    std::size_t index = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        index = index * axis_sizes_[i] + coords[i];
    return index;
}

Coords Archive::coords_of(std::size_t index) const
{
    require(index < cells_.size(), "cell index outside the archive");
    Coords coords(axis_sizes_.size());
    for (std::size_t i = axis_sizes_.size(); i-- > 0;) {
        coords[i] = index % axis_sizes_[i];
        index /= axis_sizes_[i];
    }
    return coords;
}

const Elite* Archive::find(std::span<const std::size_t> coords) const
{
    return at_index(linear_index(coords));
}

const Elite* Archive::at_index(std::size_t index) const
{
    require(index < cells_.size(), "cell index outside the archive");
    return cells_[index] ? &*cells_[index] : nullptr;
}

InsertOutcome Archive::insert(Solution candidate, std::uint64_t birth_step)
{
    const std::size_t index = linear_index(candidate.coords);
    InsertOutcome outcome;
    outcome.coords = candidate.coords;
    outcome.new_fitness = candidate.fitness;

    auto& cell = cells_[index];
    if (!cell) {
        cell = Elite{std::move(candidate), birth_step};
        ++occupied_;
        outcome.kind = InsertOutcome::Kind::inserted_empty;
        return outcome;
    }
    outcome.old_fitness = cell->solution.fitness;
    if (cell->solution.fitness < candidate.fitness) {
        retired_selections_ += stats_[index].times_selected;
        stats_[index] = {};
        cell = Elite{std::move(candidate), birth_step};
        outcome.kind = InsertOutcome::Kind::replaced;
        return outcome;
    }
    outcome.kind = InsertOutcome::Kind::rejected;
    return outcome;
}

const CellStats& Archive::stats(std::span<const std::size_t> coords) const
{
    return stats_[linear_index(coords)];
}

void Archive::record_selection(std::span<const std::size_t> coords)
{
    const std::size_t index = linear_index(coords);
    require(cells_[index].has_value(), "selected cell is empty");
    ++stats_[index].times_selected;
    ++total_selections_;
}

void Archive::record_success(std::span<const std::size_t> coords)
{
    ++stats_[linear_index(coords)].offspring_inserted;
}

std::vector<std::size_t> Archive::occupied_indices() const
{
    std::vector<std::size_t> out;
    out.reserve(occupied_);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i])
            out.push_back(i);
    return out;
}

std::vector<const Elite*> Archive::elites() const
{
    std::vector<const Elite*> out;
    out.reserve(occupied_);
    for (const auto& cell : cells_)
        if (cell)
            out.push_back(&*cell);
    return out;
}

void Archive::restore(Elite elite)
{
    const std::size_t index = linear_index(elite.solution.coords);
    require(!cells_[index].has_value(), "restore: cell already occupied");
    cells_[index] = std::move(elite);
    ++occupied_;
}

bool Archive::operator==(const Archive& other) const
{
    return axis_sizes_ == other.axis_sizes_ && occupied_ == other.occupied_ && cells_ == other.cells_ &&
           stats_ == other.stats_ && total_selections_ == other.total_selections_ &&
           retired_selections_ == other.retired_selections_;
}

} // namespace melita
