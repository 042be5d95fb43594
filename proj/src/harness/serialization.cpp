#include <melita/harness/serialization.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace melita::harness {

using nlohmann::json;

namespace {

json artefact_to_json(const Artefact& a)
{
    json j;
    j["modality"] = a.modality;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RealVector>) {
                j["kind"] = "vector";
                j["payload"] = p.values;
            } else if constexpr (std::is_same_v<T, Image>) {
                j["kind"] = "image";
                j["width"] = p.width;
                j["height"] = p.height;
                j["payload"] = p.rgb;
            } else {
                j["kind"] = "tokens";
                j["payload"] = p.tokens;
            }
        },
        a.payload);
    return j;
}

Artefact artefact_from_json(const json& j)
{
    Artefact a;
    a.modality = j.at("modality").get<std::size_t>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "vector") {
        a.payload = RealVector{j.at("payload").get<std::vector<double>>()};
    } else if (kind == "image") {
        Image img;
        img.width = j.at("width").get<std::size_t>();
        img.height = j.at("height").get<std::size_t>();
        img.rgb = j.at("payload").get<std::vector<double>>();
        if (img.rgb.size() != 3 * img.width * img.height)
            throw std::runtime_error("archive: image payload size does not match width*height*3");
        a.payload = std::move(img);
    } else if (kind == "tokens") {
        a.payload = TokenText{j.at("payload").get<std::vector<int>>()};
    } else {
        throw std::runtime_error("archive: unknown artefact kind '" + kind + "'");
    }
    return a;
}

std::string format_real(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

} // namespace

json archive_to_json(const Archive& archive, const std::string& hash, const json& domain)
{
    json cells = json::array();
    for (const Elite* e : archive.elites()) {
        json artefacts = json::array();
        for (const auto& a : e->solution.artefacts)
            artefacts.push_back(artefact_to_json(a));
        cells.push_back({{"coords", e->solution.coords},
                         {"fitness", e->solution.fitness},
                         {"birth_step", e->birth_step},
                         {"artefacts", std::move(artefacts)}});
    }
    json j;
    j["config_hash"] = hash;
    j["axis_sizes"] = std::vector<std::size_t>(archive.axis_sizes().begin(), archive.axis_sizes().end());
    j["domain"] = domain;
    j["cells"] = std::move(cells);
    return j;
}

LoadedArchive archive_from_json(const json& j)
{
    try {
        LoadedArchive out{Archive(j.at("axis_sizes").get<std::vector<std::size_t>>()),
                          j.at("config_hash").get<std::string>(), j.value("domain", json())};
        for (const auto& cell : j.at("cells")) {
            Elite e;
            e.solution.coords = cell.at("coords").get<Coords>();
            e.solution.fitness = cell.at("fitness").get<double>();
            e.birth_step = cell.at("birth_step").get<std::uint64_t>();
            for (const auto& a : cell.at("artefacts"))
                e.solution.artefacts.push_back(artefact_from_json(a));
            for (std::size_t i = 0; i < e.solution.artefacts.size(); ++i)
                if (e.solution.artefacts[i].modality != i)
                    throw std::runtime_error("archive: artefacts must be ordered by modality");
            if (e.solution.artefacts.size() != out.archive.dimensions() || !out.archive.contains(e.solution.coords))
                throw std::runtime_error("archive: cell does not match the archive's axes");
            out.archive.restore(std::move(e));
        }
        return out;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("archive: malformed file: ") + e.what());
    } catch (const ContractViolation& e) {
        throw std::runtime_error(std::string("archive: ") + e.what());
    }
}

LoadedArchive load_archive(const std::filesystem::path& path)
{
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return archive_from_json(j);
}

std::string dump_json(const json& j)
{
    return j.dump() + "\n";
}

std::string metrics_csv(std::span<const metrics::MetricsSample> series)
{
    std::string out = "step,coverage,mean_fitness,max_fitness,qd_score\n";
    for (const auto& s : series) {
        out += std::to_string(s.step);
        for (double x : {s.coverage, s.mean_fitness, s.max_fitness, s.qd_score}) {
            out += ',';
            out += format_real(x);
        }
        out += '\n';
    }
    return out;
}

std::vector<metrics::MetricsSample> parse_metrics_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "step,coverage,mean_fitness,max_fitness,qd_score")
        throw std::runtime_error("metrics csv: unexpected header");
    std::vector<metrics::MetricsSample> out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        metrics::MetricsSample s;
        unsigned long long step = 0;
        if (std::sscanf(line.c_str(), "%llu,%lf,%lf,%lf,%lf", &step, &s.coverage, &s.mean_fitness, &s.max_fitness,
                        &s.qd_score) != 5)
            throw std::runtime_error("metrics csv: malformed row '" + line + "'");
        s.step = step;
        out.push_back(s);
    }
    return out;
}

std::vector<metrics::MetricsSample> load_metrics_csv(const std::filesystem::path& path)
{
    return parse_metrics_csv(read_file(path));
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << contents;
    out.flush();
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

} // namespace melita::harness
