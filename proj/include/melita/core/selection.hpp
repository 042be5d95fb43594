#pragma once

#include <melita/core/archive.hpp>

namespace melita {

enum class SelectionKind { uniform, ucb };

struct SelectionPolicy {
    SelectionKind kind = SelectionKind::ucb;
    double ucb_c = 1.0;
};

/// Uniformly random occupied cell. Counts the selection.
Coords select_uniform(Archive& archive, Rng& rng);

/// UCB1 over occupied cells:
///   score(i) = offspring_inserted(i) / max(1, n_i) + c * sqrt(2 ln T / n_i)
/// with n_i = times_selected(i) and T = total_selections before this draw.
/// Never-selected cells score +inf. Ties are broken uniformly with rng.
Coords select_ucb(Archive& archive, Rng& rng, double c = 1.0);

/// The score used by select_ucb, exposed for inspection.
double ucb_score(const CellStats& stats, std::uint64_t total_selections, double c);

Coords select_parent(Archive& archive, Rng& rng, const SelectionPolicy& policy);

} // namespace melita
