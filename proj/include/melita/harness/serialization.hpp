#pragma once

#include <melita/core/run.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>

namespace melita::harness {

/// Archive file layout:
///   {config_hash, axis_sizes, domain,
///    cells: [{coords, fitness, birth_step,
///             artefacts: [{modality, kind, payload[, width, height]}]}]}
/// kind is "vector" (payload: flat reals), "image" (payload: flat row-major
/// RGB reals plus width/height) or "tokens" (payload: integers). Cells are in
/// ascending coordinate order.
nlohmann::json archive_to_json(const Archive& archive, const std::string& config_hash,
                               const nlohmann::json& domain = nullptr);

struct LoadedArchive {
    Archive archive;
    std::string config_hash;
    nlohmann::json domain;
};

LoadedArchive archive_from_json(const nlohmann::json& j);
LoadedArchive load_archive(const std::filesystem::path& path);

/// Compact dump followed by a newline.
std::string dump_json(const nlohmann::json& j);

/// Header `step,coverage,mean_fitness,max_fitness,qd_score`, one row per
/// sample, reals with 9 significant digits.
std::string metrics_csv(std::span<const metrics::MetricsSample> series);
std::vector<metrics::MetricsSample> parse_metrics_csv(const std::string& text);
std::vector<metrics::MetricsSample> load_metrics_csv(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

} // namespace melita::harness
