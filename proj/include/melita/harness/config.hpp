#pragma once

#include <melita/core/run.hpp>
#include <melita/domains/registry.hpp>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace melita::harness {

inline constexpr const char* library_version = "0.1.0";

/// Invalid configuration. The message starts with the offending field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// One fully specified run.
struct RunSpec {
    domains::DomainSpec domain;
    RunConfig algorithm;
    std::vector<std::size_t> axis_sizes{16, 16};
    std::uint64_t seed = 0;
};

/// A named problem instance; its seed parameterises the domain.
struct Label {
    std::string name;
    std::uint64_t domain_seed = 0;
};

struct ExperimentConfig {
    std::vector<Label> labels{{"T1", 1}};
    std::size_t runs_per_method = 10;
    std::vector<Method> methods{Method::mapelites, Method::melita};
    std::filesystem::path output_dir = "runs";
    RunSpec base; // seed is the base; run i uses seed + i
};

const char* to_string(Method method);
const char* to_string(SelectionKind kind);

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& config);

/// Run spec for one (label, method, run index) cell of an experiment.
RunSpec derive_run(const ExperimentConfig& config, const Label& label, Method method, std::size_t run_index);
nlohmann::json to_json(const RunSpec& spec);

/// FNV-1a 64 over the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& j);

} // namespace melita::harness
