#pragma once

#include <melita/harness/config.hpp>

#include <optional>

namespace melita::harness {

struct RunOutputs {
    std::string label;
    Method method = Method::melita;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t domain_seed = 0;
    std::string config_hash;
    std::filesystem::path metrics;   // relative to the output directory
    std::filesystem::path archive;
    std::vector<std::filesystem::path> snapshots;
};

struct Manifest {
    bool complete = false;
    ExperimentConfig config;
    std::vector<RunOutputs> runs;
};

/// Executes one run and returns its record.
RunRecord execute(const RunSpec& spec);

/// Runs every label x method x run index, writing
///   <out>/<method>/<label>/run_<NNN>.metrics.csv
///   <out>/<method>/<label>/run_<NNN>.archive.json
///   <out>/<method>/<label>/run_<NNN>.step_<S>.archive.json   (snapshots)
///   <out>/manifest.json
/// Both methods share the seed of a (label, run index) pair, so their initial
/// populations are identical. On an I/O error the manifest is written with
/// "complete": false and the error is rethrown.
Manifest run_experiment(const ExperimentConfig& config, std::optional<std::filesystem::path> out_dir = {});

nlohmann::json manifest_to_json(const Manifest& manifest);
Manifest load_manifest(const std::filesystem::path& path);

/// Re-executes the experiment recorded in a manifest into `out_dir`.
Manifest replay(const std::filesystem::path& manifest_path, const std::filesystem::path& out_dir);

} // namespace melita::harness
