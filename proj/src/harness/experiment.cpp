#include <melita/harness/experiment.hpp>
#include <melita/harness/serialization.hpp>

#include <cstdio>

namespace melita::harness {

using nlohmann::json;

namespace {

std::string run_stem(std::size_t run_index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "run_%03zu", run_index);
    return buf;
}

void write_manifest(const Manifest& manifest, const std::filesystem::path& out_dir)
{
    // no timestamp: a replay must reproduce the manifest byte for byte too
    write_file(out_dir / "manifest.json", manifest_to_json(manifest).dump(2) + "\n");
}

} // namespace

RunRecord execute(const RunSpec& spec)
{
    const auto domain = domains::make_domain(spec.domain);
    Rng rng(spec.seed);
    return run(*domain, spec.algorithm, rng);
}

Manifest run_experiment(const ExperimentConfig& config, std::optional<std::filesystem::path> out_dir)
{
    const std::filesystem::path out = out_dir.value_or(config.output_dir);
    Manifest manifest;
    manifest.config = config;

    try {
        for (const auto& label : config.labels) {
            for (std::size_t r = 0; r < config.runs_per_method; ++r) {
                for (Method method : config.methods) {
                    const RunSpec spec = derive_run(config, label, method, r);
                    const json spec_json = to_json(spec);
                    RunOutputs outputs;
                    outputs.label = label.name;
                    outputs.method = method;
                    outputs.run_index = r;
                    outputs.seed = spec.seed;
                    outputs.domain_seed = label.domain_seed;
                    outputs.config_hash = config_hash(spec_json);

                    const RunRecord record = execute(spec);
                    const auto dir = std::filesystem::path(to_string(method)) / label.name;
                    const std::string stem = run_stem(r);
                    const json domain_json = spec_json.at("domain");

                    outputs.metrics = dir / (stem + ".metrics.csv");
                    write_file(out / outputs.metrics, metrics_csv(record.series));
                    for (const auto& snap : record.snapshots) {
                        auto path = dir / (stem + ".step_" + std::to_string(snap.step) + ".archive.json");
                        write_file(out / path, dump_json(archive_to_json(snap.archive, outputs.config_hash, domain_json)));
                        outputs.snapshots.push_back(std::move(path));
                    }
                    outputs.archive = dir / (stem + ".archive.json");
                    write_file(out / outputs.archive,
                               dump_json(archive_to_json(record.archive, outputs.config_hash, domain_json)));
                    manifest.runs.push_back(std::move(outputs));
                }
            }
        }
    } catch (const std::exception&) {
        manifest.complete = false;
        try {
            write_manifest(manifest, out);
        } catch (const std::exception&) {
            // the original error is the one worth reporting
        }
        throw;
    }

    manifest.complete = true;
    write_manifest(manifest, out);
    return manifest;
}

json manifest_to_json(const Manifest& manifest)
{
    json runs = json::array();
    for (const auto& r : manifest.runs) {
        json snaps = json::array();
        for (const auto& s : r.snapshots)
            snaps.push_back(s.generic_string());
        runs.push_back({{"label", r.label},
                        {"method", to_string(r.method)},
                        {"run_index", r.run_index},
                        {"seed", r.seed},
                        {"domain_seed", r.domain_seed},
                        {"config_hash", r.config_hash},
                        {"metrics", r.metrics.generic_string()},
                        {"archive", r.archive.generic_string()},
                        {"snapshots", snaps}});
    }
    const json config = to_json(manifest.config);
    return {{"manifest_version", 1},
            {"library_version", library_version},
            {"complete", manifest.complete},
            {"config", config},
            {"config_hash", config_hash(config)},
            {"runs", runs}};
}

Manifest load_manifest(const std::filesystem::path& path)
{
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    Manifest m;
    try {
        m.complete = j.at("complete").get<bool>();
        m.config = parse_config(j.at("config"));
        for (const auto& r : j.at("runs")) {
            RunOutputs o;
            o.label = r.at("label").get<std::string>();
            o.method = r.at("method") == "melita" ? Method::melita : Method::mapelites;
            o.run_index = r.at("run_index").get<std::size_t>();
            o.seed = r.at("seed").get<std::uint64_t>();
            o.domain_seed = r.at("domain_seed").get<std::uint64_t>();
            o.config_hash = r.at("config_hash").get<std::string>();
            o.metrics = r.at("metrics").get<std::string>();
            o.archive = r.at("archive").get<std::string>();
            for (const auto& s : r.at("snapshots"))
                o.snapshots.emplace_back(s.get<std::string>());
            m.runs.push_back(std::move(o));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(path.string() + ": malformed manifest: " + e.what());
    }
    return m;
}

Manifest replay(const std::filesystem::path& manifest_path, const std::filesystem::path& out_dir)
{
    return run_experiment(load_manifest(manifest_path).config, out_dir);
}

} // namespace melita::harness
