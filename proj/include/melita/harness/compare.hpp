#pragma once

#include <melita/metrics/archive_metrics.hpp>
#include <melita/metrics/rank_sum.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace melita::harness {

inline constexpr double significance_level = 0.05;

struct ComparisonRow {
    std::string label;
    std::string metric; // e.g. "final_mean_fitness", "auc_coverage"
    std::size_t runs_a = 0;
    std::size_t runs_b = 0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    metrics::RankSumResult test;
    bool significant = false;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::vector<std::string> warnings;
};

/// Per-run summary values of one metric series: the four final values and
/// the four unit-step AUCs, keyed by metric name.
std::vector<std::pair<std::string, double>> summarize_series(std::span<const metrics::MetricsSample> series);

/// Compares two method directories laid out as <dir>/<label>/run_*.metrics.csv.
/// Labels present in only one directory are skipped with a warning. Throws
/// std::runtime_error when a label has fewer than two runs on either side.
ComparisonReport compare(const std::filesystem::path& dir_a, const std::filesystem::path& dir_b);

std::string comparison_csv(const ComparisonReport& report);
std::string comparison_summary(const ComparisonReport& report, const std::string& name_a, const std::string& name_b);

} // namespace melita::harness
