// Command-line front end: run experiments, replay them, compare methods and
// analyse final archives.

#include <melita/domains/toy_media.hpp>
#include <melita/domains/vector_pair.hpp>
#include <melita/harness/analysis.hpp>
#include <melita/harness/compare.hpp>
#include <melita/harness/experiment.hpp>
#include <melita/harness/serialization.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace melita;

namespace {

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        harness::write_file(out, text);
}

json constants()
{
    json m = json::array();
    for (const auto& row : domains::coherence_matrix())
        m.push_back(row);
    const domains::TopicModel model;
    json topics = json::array();
    for (std::size_t t = 0; t < domains::TopicModel::topic_count; ++t)
        topics.push_back(model.row(t));
    return {
        {"library_version", harness::library_version},
        {"toy_media",
         {{"coherence_matrix", m},
          {"coherence_matrix_seed", domains::coherence_matrix_seed},
          {"topic_rows", topics},
          {"topic_threshold", domains::TopicModel::default_threshold},
          {"text_length", {domains::min_text_length, domains::max_text_length}},
          {"complexity_thresholds", domains::complexity_thresholds},
          {"colourfulness_thresholds", domains::colourfulness_thresholds},
          {"image_statistics",
           {"mean_luminance_tl", "mean_luminance_tr", "mean_luminance_bl", "mean_luminance_br", "edge_fraction_tl",
            "edge_fraction_tr", "edge_fraction_bl", "edge_fraction_br", "mean_r", "mean_g", "mean_b",
            "colourfulness_scaled", "edge_complexity", "luminance_std", "mean_abs_dx", "mean_abs_dy"}}}},
        {"vector_pair",
         {{"dimension", domains::vp_dimension},
          {"norm_thresholds", domains::vp_norm_thresholds},
          {"roughness_thresholds", domains::vp_roughness_thresholds}}},
    };
}

std::vector<double> parse_weights(const std::string& text)
{
    std::vector<double> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        double w = 0.0;
        try {
            w = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::runtime_error("--weights: cannot parse '" + item + "'");
        out.push_back(w);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MAP-Elites and MEliTA experiments on synthetic bimodal domains"};
    app.set_version_flag("--version", harness::library_version);
    app.require_subcommand(1);

    std::string config_path, out;
    auto* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
    run->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out, "Output directory (overrides output_dir)");

    std::string manifest_path;
    auto* replay = app.add_subcommand("replay", "Re-execute the experiment recorded in a manifest");
    replay->add_option("--manifest", manifest_path, "manifest.json of a previous run")->required()->check(CLI::ExistingFile);
    replay->add_option("--out", out, "Output directory")->required();

    std::string dir_a, dir_b;
    auto* compare = app.add_subcommand("compare", "Rank-sum comparison of two method directories");
    compare->add_option("--a", dir_a, "Directory of method A (<dir>/<label>/run_*.metrics.csv)")->required();
    compare->add_option("--b", dir_b, "Directory of method B")->required();
    compare->add_option("--out", out, "Write <out>.csv and <out>.txt instead of printing the summary");

    std::string archive_path, distance = "euclidean";
    std::size_t modality = 0;
    auto* diversity = app.add_subcommand("diversity", "Mean and nearest-neighbour distances of final elites");
    diversity->add_option("--archive", archive_path, "Archive JSON file")->required()->check(CLI::ExistingFile);
    diversity->add_option("--modality", modality, "Modality index")->required();
    diversity->add_option("--distance", distance, "euclidean | topic-posterior")->capture_default_str();
    diversity->add_option("--out", out, "Output JSON file (default: stdout)");

    std::size_t k = 5;
    std::string weights;
    std::uint64_t seed = 0;
    auto* medoids = app.add_subcommand("medoids", "k-medoid exemplars of the final elites");
    medoids->add_option("--archive", archive_path, "Archive JSON file")->required()->check(CLI::ExistingFile);
    medoids->add_option("-k", k, "Number of exemplars")->capture_default_str();
    medoids->add_option("--weights", weights, "Comma-separated per-modality weights (default: all 1)");
    medoids->add_option("--seed", seed, "Seed for the initial medoids")->capture_default_str();
    medoids->add_option("--out", out, "Output JSON file (default: stdout)");

    auto* consts = app.add_subcommand("constants", "Print the fixed domain constants as JSON");
    consts->add_option("--out", out, "Output JSON file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const auto config = harness::load_config(config_path);
            std::optional<fs::path> dir;
            if (!out.empty())
                dir = out;
            const auto manifest = harness::run_experiment(config, dir);
            std::cout << "wrote " << manifest.runs.size() << " runs to " << dir.value_or(config.output_dir).string()
                      << "\n";
        } else if (*replay) {
            const auto manifest = harness::replay(manifest_path, out);
            std::cout << "replayed " << manifest.runs.size() << " runs into " << out << "\n";
        } else if (*compare) {
            const auto report = harness::compare(dir_a, dir_b);
            const auto name_a = fs::path(dir_a).filename().string();
            const auto name_b = fs::path(dir_b).filename().string();
            const auto summary = harness::comparison_summary(report, name_a, name_b);
            for (const auto& w : report.warnings)
                std::cerr << "warning: " << w << "\n";
            if (out.empty()) {
                std::cout << summary;
            } else {
                harness::write_file(out + ".csv", harness::comparison_csv(report));
                harness::write_file(out + ".txt", summary);
            }
        } else if (*diversity) {
            const auto loaded = harness::load_archive(archive_path);
            const auto analysis = harness::analyze_diversity(loaded.archive, modality, distance);
            emit(harness::to_json(analysis, modality, distance).dump(2) + "\n", out);
        } else if (*medoids) {
            const auto loaded = harness::load_archive(archive_path);
            const auto analysis = harness::medoids(loaded.archive, k, parse_weights(weights), seed);
            emit(harness::to_json(analysis).dump(2) + "\n", out);
        } else if (*consts) {
            emit(constants().dump(2) + "\n", out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
