#pragma once

#include <melita/core/types.hpp>

#include <optional>
#include <span>
#include <vector>

namespace melita {

struct CellStats {
    std::uint64_t times_selected = 0;
    std::uint64_t offspring_inserted = 0;

    bool operator==(const CellStats&) const = default;
};

struct InsertOutcome {
    enum class Kind { inserted_empty, replaced, rejected };

    Kind kind = Kind::rejected;
    Coords coords;
    double old_fitness = 0.0;
    double new_fitness = 0.0;
};

/// N-dimensional grid of cells, each holding at most one elite.
///
/// Selection statistics belong to the current occupant: when an elite is
/// evicted its counters are retired and the cell restarts from zero.
/// total_selections() is monotone and always equals the sum of live counters
/// plus the retired ones.
class Archive {
public:
    explicit Archive(std::vector<std::size_t> axis_sizes);

    std::span<const std::size_t> axis_sizes() const { return axis_sizes_; }
    std::size_t dimensions() const { return axis_sizes_.size(); }
    std::size_t cell_count() const { return cells_.size(); }
    std::size_t size() const { return occupied_; }
    bool empty() const { return occupied_ == 0; }

    bool contains(std::span<const std::size_t> coords) const;
    std::size_t linear_index(std::span<const std::size_t> coords) const;
    Coords coords_of(std::size_t index) const;

    const Elite* find(std::span<const std::size_t> coords) const;
    const Elite* at_index(std::size_t index) const;

    /// Places the candidate in the cell named by its coords if the cell is
    /// empty or the occupant is strictly less fit.
    InsertOutcome insert(Solution candidate, std::uint64_t birth_step = 0);

    const CellStats& stats(std::span<const std::size_t> coords) const;
    void record_selection(std::span<const std::size_t> coords);
    void record_success(std::span<const std::size_t> coords);
    std::uint64_t total_selections() const { return total_selections_; }
    std::uint64_t retired_selections() const { return retired_selections_; }

    /// Linear indices of occupied cells, ascending (lexicographic coords order).
    std::vector<std::size_t> occupied_indices() const;
    /// Occupied elites in ascending cell order.
    std::vector<const Elite*> elites() const;

    /// Restores an elite as-is, e.g. when loading from disk.
    void restore(Elite elite);

    bool operator==(const Archive&) const;

private:
    std::vector<std::size_t> axis_sizes_;
    std::vector<std::optional<Elite>> cells_;
    std::vector<CellStats> stats_;
    std::size_t occupied_ = 0;
    std::uint64_t total_selections_ = 0;
    std::uint64_t retired_selections_ = 0;
};

} // namespace melita
