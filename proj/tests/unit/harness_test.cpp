#include <doctest.h>

#include <melita/harness/analysis.hpp>
#include <melita/harness/compare.hpp>
#include <melita/harness/experiment.hpp>
#include <melita/harness/serialization.hpp>

#include <chrono>
#include <set>
#include <cmath>
#include <unistd.h>

using namespace melita;
using namespace melita::harness;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / ("melita_" + name + "_" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::map<std::string, std::string> snapshot_tree(const fs::path& root)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file())
            out[fs::relative(e.path(), root).generic_string()] = read_file(e.path());
    return out;
}

ExperimentConfig small_config(const std::string& domain = "vector-pair", std::int64_t steps = 200)
{
    return parse_config(json{{"labels", {{{"name", "T1"}, {"domain_seed", 1}}}},
                             {"runs_per_method", 1},
                             {"run", {{"domain", {{"name", domain}}}, {"steps", steps}, {"seed", 3}}}});
}

void write_series(const fs::path& file, double final_mean, std::size_t rows = 5)
{
    std::vector<metrics::MetricsSample> series;
    for (std::size_t i = 1; i <= rows; ++i)
        series.push_back({i, 0.1, final_mean * double(i) / double(rows), final_mean, final_mean * 10});
    write_file(file, metrics_csv(series));
}

Elite vp_elite(Coords coords, std::vector<double> t, std::vector<double> v, double fitness)
{
    return {{{{0, RealVector{std::move(t)}}, {1, RealVector{std::move(v)}}}, fitness, std::move(coords)}, 0};
}

} // namespace

TEST_CASE("config defaults and validation")
{
    const auto c = parse_config(json::object());
    CHECK(c.base.algorithm.steps == 2000);
    CHECK(c.base.algorithm.init_count == 100);
    CHECK(c.base.axis_sizes == std::vector<std::size_t>{16, 16});
    CHECK(c.runs_per_method == 10);
    CHECK(c.base.algorithm.selection.kind == SelectionKind::ucb);
    CHECK(c.base.algorithm.selection.ucb_c == 1.0);
    CHECK(c.methods == std::vector<Method>{Method::mapelites, Method::melita});

    try {
        parse_config(json{{"run", {{"stepz", 3}}}});
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(e.path() == "run.stepz");
        CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
    }
    try {
        parse_config(json{{"run", {{"steps", -1}}}});
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(e.path() == "run.steps");
    }
    CHECK_THROWS_AS(parse_config(json{{"run", {{"init_count", 0}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"run", {{"axis_sizes", {8, 8}}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"runs_per_method", 0}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"methods", {"vanilla"}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"run", {{"domain", {{"name", "nope"}}}}}}), ConfigError);

    TempDir dir("config");
    write_file(dir.path / "bad.json", "{ not json");
    CHECK_THROWS(load_config(dir.path / "bad.json"));
    CHECK_THROWS(load_config(dir.path / "missing.json"));

    // round trip through to_json
    const auto again = parse_config(to_json(small_config()));
    CHECK(to_json(again) == to_json(small_config()));
}

TEST_CASE("run seeds are derived per run index and shared across methods")
{
    auto c = small_config();
    c.base.seed = 40;
    const auto a = derive_run(c, c.labels[0], Method::mapelites, 3);
    const auto b = derive_run(c, c.labels[0], Method::melita, 3);
    CHECK(a.seed == 43);
    CHECK(b.seed == 43);
    CHECK(a.domain.domain_seed == 1);
    CHECK(config_hash(to_json(a)) != config_hash(to_json(b)));
    CHECK(config_hash(to_json(a)).size() == 16);
}

TEST_CASE("experiment outputs")
{
    TempDir dir("experiment");
    const auto manifest = run_experiment(small_config(), dir.path / "out");
    CHECK(manifest.complete);
    REQUIRE(manifest.runs.size() == 2);

    std::size_t metrics = 0, archives = 0, manifests = 0;
    for (const auto& e : fs::recursive_directory_iterator(dir.path / "out")) {
        const auto name = e.path().filename().string();
        metrics += name.ends_with(".metrics.csv");
        archives += name.ends_with(".archive.json");
        manifests += name == "manifest.json";
    }
    CHECK(metrics == 2);
    CHECK(archives == 2);
    CHECK(manifests == 1);

    for (const auto& r : manifest.runs) {
        const auto series = load_metrics_csv(dir.path / "out" / r.metrics);
        CHECK(series.size() == 200);
        // the last recorded sample equals the metrics of the stored archive
        const auto loaded = load_archive(dir.path / "out" / r.archive);
        const auto recomputed = metrics::archive_metrics(loaded.archive, 200);
        CHECK(recomputed.coverage == series.back().coverage);
        CHECK(recomputed.max_fitness == doctest::Approx(series.back().max_fitness).epsilon(1e-8));
        CHECK(recomputed.mean_fitness == doctest::Approx(series.back().mean_fitness).epsilon(1e-8));
        CHECK(loaded.config_hash == r.config_hash);
    }

    // re-running reproduces every byte; so does a replay from the manifest
    run_experiment(small_config(), dir.path / "again");
    replay(dir.path / "out" / "manifest.json", dir.path / "replayed");
    const auto first = snapshot_tree(dir.path / "out");
    CHECK(first == snapshot_tree(dir.path / "again"));
    CHECK(first == snapshot_tree(dir.path / "replayed"));

    const auto m = load_manifest(dir.path / "out" / "manifest.json");
    CHECK(m.complete);
    CHECK(m.runs.size() == 2);
    CHECK(m.runs[0].seed == 3);
    CHECK(m.runs[1].seed == 3);
    CHECK(json::parse(read_file(dir.path / "out" / "manifest.json")).at("library_version") == library_version);
}

TEST_CASE("unwritable output marks the manifest incomplete")
{
    TempDir dir("io_error");
    // a file where the method directory should go
    write_file(dir.path / "mapelites", "blocker");
    CHECK_THROWS(run_experiment(small_config(), dir.path));
    const auto m = load_manifest(dir.path / "manifest.json");
    CHECK_FALSE(m.complete);
}

TEST_CASE("snapshots")
{
    TempDir dir("snapshots");
    auto c = small_config();
    c.base.algorithm.snapshot_every = 50;
    const auto manifest = run_experiment(c, dir.path);
    for (const auto& r : manifest.runs) {
        REQUIRE(r.snapshots.size() == 3);
        CHECK(r.snapshots[0].filename() == "run_000.step_50.archive.json");
        CHECK(fs::exists(dir.path / r.snapshots[2]));
    }
}

TEST_CASE("archive round trip is byte identical")
{
    for (const std::string domain : {"vector-pair", "toy-media"}) {
        CAPTURE(domain);
        TempDir dir("roundtrip");
        const auto manifest = run_experiment(small_config(domain, 50), dir.path);
        for (const auto& r : manifest.runs) {
            const auto text = read_file(dir.path / r.archive);
            const auto loaded = load_archive(dir.path / r.archive);
            CHECK(dump_json(archive_to_json(loaded.archive, loaded.config_hash, loaded.domain)) == text);
            CHECK(loaded.archive.size() > 0);
        }
    }
    CHECK_THROWS(archive_from_json(json{{"config_hash", "x"}, {"axis_sizes", {2, 2}},
                                        {"cells", {{{"coords", {5, 0}}, {"fitness", 0.5}, {"birth_step", 0},
                                                    {"artefacts", json::array()}}}}}));
}

TEST_CASE("metrics csv")
{
    const std::vector<metrics::MetricsSample> s{{1, 0.5, 0.25, 0.75, 12.0}, {2, 1.0 / 3, 0.1, 0.2, 0.3}};
    const auto text = metrics_csv(s);
    CHECK(text.starts_with("step,coverage,mean_fitness,max_fitness,qd_score\n1,0.5,0.25,0.75,12\n"));
    CHECK(text.find("0.333333333") != std::string::npos);
    const auto back = parse_metrics_csv(text);
    REQUIRE(back.size() == 2);
    CHECK(back[1].coverage == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK_THROWS(parse_metrics_csv("nope\n"));
}

TEST_CASE("compare")
{
    TempDir dir("compare");
    const auto a = dir.path / "a", b = dir.path / "b";

    SUBCASE("identical files: no significance")
    {
        for (int r = 0; r < 4; ++r) {
            write_series(a / "T1" / ("run_00" + std::to_string(r) + ".metrics.csv"), 0.5 + 0.1 * r);
            write_series(b / "T1" / ("run_00" + std::to_string(r) + ".metrics.csv"), 0.5 + 0.1 * r);
        }
        const auto report = compare(a, b);
        CHECK(report.rows.size() == 8);
        for (const auto& row : report.rows) {
            CHECK(row.test.p_two_tail == doctest::Approx(1.0).epsilon(1e-12));
            CHECK_FALSE(row.significant);
        }
        CHECK(report.warnings.empty());
    }
    SUBCASE("one method dominates every run")
    {
        for (int r = 0; r < 10; ++r) {
            write_series(a / "T1" / ("run_00" + std::to_string(r) + ".metrics.csv"), 0.8 + 0.01 * r);
            write_series(b / "T1" / ("run_00" + std::to_string(r) + ".metrics.csv"), 0.3 + 0.01 * r);
        }
        const auto report = compare(a, b);
        bool found = false;
        for (const auto& row : report.rows)
            if (row.metric == "final_mean_fitness") {
                found = true;
                CHECK(row.test.p_two_tail < 0.05);
                CHECK(row.significant);
                CHECK(row.mean_a > row.mean_b);
                CHECK(row.runs_a == 10);
            }
        CHECK(found);
        const auto swapped = compare(b, a);
        for (std::size_t i = 0; i < report.rows.size(); ++i)
            CHECK(swapped.rows[i].test.p_two_tail == doctest::Approx(report.rows[i].test.p_two_tail).epsilon(1e-12));
        const auto csv = comparison_csv(report);
        CHECK(csv.starts_with("label,metric,"));
        CHECK(comparison_summary(report, "a", "b").find("sampled after every parent selection") != std::string::npos);
    }
    SUBCASE("single run per method")
    {
        write_series(a / "T1" / "run_000.metrics.csv", 0.5);
        write_series(b / "T1" / "run_000.metrics.csv", 0.5);
        CHECK_THROWS_WITH_AS(compare(a, b), doctest::Contains("insufficient samples"), std::runtime_error);
    }
    SUBCASE("mismatched run counts warn but still compare")
    {
        for (int r = 0; r < 3; ++r)
            write_series(a / "T1" / ("run_00" + std::to_string(r) + ".metrics.csv"), 0.5);
        for (int r = 0; r < 4; ++r)
            write_series(b / "T1" / ("run_00" + std::to_string(r) + ".metrics.csv"), 0.5);
        const auto report = compare(a, b);
        CHECK(report.rows.size() == 8);
        CHECK(report.warnings.size() == 1);
    }
}

TEST_CASE("diversity analysis")
{
    SUBCASE("two elites with known payloads")
    {
        Archive a({16, 16});
        a.restore(vp_elite({0, 0}, {0, 0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 0}, 0.5));
        a.restore(vp_elite({3, 4}, {3, 4, 0, 0, 0, 0, 0, 1}, {1, 2, 2, 0, 0, 0, 0, 0}, 0.5));
        const auto text = analyze_diversity(a, 0, "euclidean");
        CHECK(text.report.mean_distance == std::vector<double>{5, 5});
        CHECK(text.report.nearest_neighbour == std::vector<double>{5, 5});
        const auto visual = analyze_diversity(a, 1, "euclidean");
        CHECK(visual.report.archive_mean_distance == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
        const auto j = to_json(visual, 1, "euclidean");
        CHECK(j.at("elites").size() == 2);
        CHECK(j.at("elites")[1].at("coords") == json{3, 4});
    }
    SUBCASE("one elite")
    {
        Archive a({16, 16});
        a.restore(vp_elite({0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, 1.0));
        const auto r = analyze_diversity(a, 0, "euclidean");
        CHECK(r.report.single_elite);
        CHECK(r.report.archive_mean_distance == 0.0);
    }
    SUBCASE("errors")
    {
        Archive empty({16, 16});
        CHECK_THROWS_WITH(analyze_diversity(empty, 0, "euclidean"), "no elites");
        Archive a({16, 16});
        a.restore(vp_elite({0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, 1.0));
        CHECK_THROWS_WITH(analyze_diversity(a, 0, "lpips"), doctest::Contains("euclidean, topic-posterior"));
        CHECK_THROWS(analyze_diversity(a, 0, "topic-posterior"));
    }
    SUBCASE("topic posterior distance on token payloads")
    {
        Archive a({16, 16});
        Image img(3, 3);
        a.restore({{{{0, TokenText{{0}}}, {1, img}}, 0.5, {0, 0}}, 0});
        a.restore({{{{0, TokenText{{4}}}, {1, img}}, 0.5, {1, 0}}, 0});
        const auto r = analyze_diversity(a, 0, "topic-posterior");
        // posteriors: 0.8 on the own topic, 1/75 elsewhere
        const double off = (1.0 / 300) / (0.2 + 15.0 / 300);
        CHECK(r.report.mean_distance[0] == doctest::Approx(std::sqrt(2.0) * (0.8 - off)).epsilon(1e-12));
        CHECK_THROWS(analyze_diversity(a, 0, "euclidean"));
        CHECK(analyze_diversity(a, 1, "euclidean").report.mean_distance[0] == 0.0);
    }
}

TEST_CASE("medoid exemplars")
{
    Archive a({16, 16});
    Rng rng(3);
    std::normal_distribution<double> g(0, 1);
    for (std::size_t i = 0; i < 12; ++i) {
        std::vector<double> t(8), v(8);
        for (auto& x : t)
            x = g(rng);
        for (auto& x : v)
            x = g(rng);
        a.restore(vp_elite({i, i % 5}, t, v, 0.5));
    }

    SUBCASE("k = 5 partitions the elites")
    {
        const auto m = medoids(a, 5, {}, 1);
        REQUIRE(m.exemplars.size() == 5);
        std::set<Coords> seen;
        for (const auto& e : m.exemplars) {
            CHECK(std::find(e.members.begin(), e.members.end(), e.coords) != e.members.end());
            for (const auto& c : e.members)
                CHECK(seen.insert(c).second);
        }
        CHECK(seen.size() == 12);
        CHECK(to_json(m).at("exemplars")[0].contains("cluster_size"));
    }
    SUBCASE("k = elite count")
    {
        const auto m = medoids(a, 12, {}, 1);
        CHECK(m.cost == 0.0);
        for (const auto& e : m.exemplars)
            CHECK(e.members.size() == 1);
    }
    SUBCASE("k = 1 is the exhaustive 1-medoid of the combined distance")
    {
        const std::vector<double> w{1.0, 0.25};
        const auto elites = a.elites();
        auto dist = [&](std::size_t i, std::size_t j) {
            double sum = 0;
            for (std::size_t m = 0; m < 2; ++m) {
                const auto& x = std::get<RealVector>(elites[i]->solution.artefacts[m].payload).values;
                const auto& y = std::get<RealVector>(elites[j]->solution.artefacts[m].payload).values;
                double d2 = 0;
                for (std::size_t k = 0; k < 8; ++k)
                    d2 += (x[k] - y[k]) * (x[k] - y[k]);
                sum += w[m] * d2;
            }
            return std::sqrt(sum);
        };
        std::size_t best = 0;
        double best_cost = 1e300;
        for (std::size_t c = 0; c < elites.size(); ++c) {
            double cost = 0;
            for (std::size_t i = 0; i < elites.size(); ++i)
                cost += dist(c, i);
            if (cost < best_cost) {
                best_cost = cost;
                best = c;
            }
        }
        const auto m = medoids(a, 1, w, 9);
        REQUIRE(m.exemplars.size() == 1);
        CHECK(m.exemplars[0].coords == elites[best]->solution.coords);
        CHECK(m.cost == doctest::Approx(best_cost).epsilon(1e-12));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS(medoids(a, 13, {}, 1));
        CHECK_THROWS(medoids(a, 2, {1.0}, 1));
        CHECK_THROWS(medoids(a, 2, {1.0, -1.0}, 1));
    }
}

TEST_CASE("protocol shape: 7 labels x 10 runs x 2 methods")
{
    TempDir dir("protocol");
    json labels = json::array();
    for (int i = 1; i <= 7; ++i)
        labels.push_back({{"name", "T" + std::to_string(i)}, {"domain_seed", i}});
    const auto config = parse_config(json{{"labels", labels}, {"run", {{"domain", {{"name", "toy-media"}}}}}});
    const auto start = std::chrono::steady_clock::now();
    const auto manifest = run_experiment(config, dir.path);
    const double minutes = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60;
    CHECK(manifest.runs.size() == 140);
    for (const auto& r : manifest.runs)
        CHECK(load_metrics_csv(dir.path / r.metrics).size() == 2000);
    CHECK(minutes < 30);
    const auto report = compare(dir.path / "mapelites", dir.path / "melita");
    CHECK(report.rows.size() == 7 * 8);
}
