#include <melita/harness/config.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace melita::harness {

using nlohmann::json;

namespace {

// Reads fields of one JSON object and rejects keys nobody asked for.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object())
            throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const json* get(const std::string& key)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    template <typename T>
    void read(const std::string& key, T& out)
    {
        const json* v = get(key);
        if (!v)
            return;
        try {
            if constexpr (std::is_unsigned_v<T>) {
                if (!v->is_number_integer())
                    throw ConfigError(field(key), "expected an integer");
                if (v->is_number_integer() && !v->is_number_unsigned() && v->get<std::int64_t>() < 0)
                    throw ConfigError(field(key), "must be >= 0");
            } else if constexpr (std::is_integral_v<T>) {
                if (!v->is_number_integer())
                    throw ConfigError(field(key), "expected an integer");
            } else if constexpr (std::is_floating_point_v<T>) {
                if (!v->is_number())
                    throw ConfigError(field(key), "expected a number");
            }
            out = v->get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(field(key), e.what());
        }
    }

    void finish() const
    {
        for (const auto& [key, value] : j_.items())
            if (!seen_.contains(key))
                throw ConfigError(field(key), "unknown key");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

Method parse_method(const json& j, const std::string& path)
{
    if (j == "mapelites")
        return Method::mapelites;
    if (j == "melita")
        return Method::melita;
    throw ConfigError(path, "expected \"mapelites\" or \"melita\"");
}

void parse_domain(const json& j, const std::string& path, domains::DomainSpec& spec)
{
    ObjectReader r(j, path);
    r.read("name", spec.name);
    const auto names = domains::domain_names();
    if (std::find(names.begin(), names.end(), spec.name) == names.end())
        throw ConfigError(r.field("name"), "unknown domain '" + spec.name + "' (available: vector-pair, toy-media)");

    if (const json* params = r.get("params")) {
        ObjectReader p(*params, r.field("params"));
        if (spec.name == "vector-pair") {
            auto& vp = spec.vector_pair;
            p.read("sigma", vp.sigma);
            p.read("full_mutation_rate", vp.full_mutation_rate);
            p.read("theme_scale", vp.theme_scale);
            if (vp.sigma < 0.0)
                throw ConfigError(p.field("sigma"), "must be >= 0");
            if (vp.theme_scale < 0.0)
                throw ConfigError(p.field("theme_scale"), "must be >= 0");
            if (vp.full_mutation_rate < 0.0 || vp.full_mutation_rate > 1.0)
                throw ConfigError(p.field("full_mutation_rate"), "must lie in [0,1]");
        } else {
            auto& tm = spec.toy_media;
            p.read("image_size", tm.image_size);
            p.read("noise_sigma", tm.noise_sigma);
            p.read("full_mutation_rate", tm.full_mutation_rate);
            if (tm.image_size < 3)
                throw ConfigError(p.field("image_size"), "must be >= 3");
            if (tm.noise_sigma < 0.0)
                throw ConfigError(p.field("noise_sigma"), "must be >= 0");
            if (tm.full_mutation_rate < 0.0 || tm.full_mutation_rate > 1.0)
                throw ConfigError(p.field("full_mutation_rate"), "must lie in [0,1]");
        }
        p.finish();
    }
    r.finish();
}

void parse_run(const json& j, const std::string& path, RunSpec& spec)
{
    ObjectReader r(j, path);
    if (const json* domain = r.get("domain"))
        parse_domain(*domain, r.field("domain"), spec.domain);

    if (const json* sel = r.get("selection")) {
        if (*sel == "uniform")
            spec.algorithm.selection.kind = SelectionKind::uniform;
        else if (*sel == "ucb")
            spec.algorithm.selection.kind = SelectionKind::ucb;
        else
            throw ConfigError(r.field("selection"), "expected \"uniform\" or \"ucb\"");
    }
    r.read("ucb_c", spec.algorithm.selection.ucb_c);
    if (spec.algorithm.selection.ucb_c < 0.0)
        throw ConfigError(r.field("ucb_c"), "must be >= 0");

    r.read("axis_sizes", spec.axis_sizes);
    r.read("init_count", spec.algorithm.init_count);
    if (spec.algorithm.init_count < 1)
        throw ConfigError(r.field("init_count"), "must be >= 1");
    r.read("steps", spec.algorithm.steps);
    if (spec.algorithm.steps < 0)
        throw ConfigError(r.field("steps"), "must be >= 0");
    r.read("seed", spec.seed);
    r.read("snapshot_every", spec.algorithm.snapshot_every);
    if (spec.algorithm.snapshot_every < 0)
        throw ConfigError(r.field("snapshot_every"), "must be >= 0");
    r.finish();

    const auto expected = domains::make_domain(spec.domain)->axis_sizes();
    if (spec.axis_sizes != expected)
        throw ConfigError(r.field("axis_sizes"), "must match the domain's declared BC ranges");
}

} // namespace

const char* to_string(Method method)
{
    return method == Method::melita ? "melita" : "mapelites";
}

const char* to_string(SelectionKind kind)
{
    return kind == SelectionKind::ucb ? "ucb" : "uniform";
}

ExperimentConfig parse_config(const json& j)
{
    ExperimentConfig config;
    ObjectReader r(j, "");

    if (const json* labels = r.get("labels")) {
        if (!labels->is_array() || labels->empty())
            throw ConfigError("labels", "expected a non-empty array");
        config.labels.clear();
        std::set<std::string> names;
        for (std::size_t i = 0; i < labels->size(); ++i) {
            const std::string path = "labels[" + std::to_string(i) + "]";
            ObjectReader lr((*labels)[i], path);
            Label label;
            lr.read("name", label.name);
            lr.read("domain_seed", label.domain_seed);
            lr.finish();
            if (label.name.empty())
                throw ConfigError(lr.field("name"), "must be non-empty");
            if (label.name.find_first_of("/\\") != std::string::npos || label.name == "." || label.name == "..")
                throw ConfigError(lr.field("name"), "must be usable as a directory name");
            if (!names.insert(label.name).second)
                throw ConfigError(lr.field("name"), "duplicate label '" + label.name + "'");
            config.labels.push_back(std::move(label));
        }
    }

    r.read("runs_per_method", config.runs_per_method);
    if (config.runs_per_method < 1)
        throw ConfigError("runs_per_method", "must be >= 1");

    if (const json* methods = r.get("methods")) {
        if (!methods->is_array() || methods->empty())
            throw ConfigError("methods", "expected a non-empty array");
        config.methods.clear();
        for (std::size_t i = 0; i < methods->size(); ++i) {
            const Method m = parse_method((*methods)[i], "methods[" + std::to_string(i) + "]");
            if (std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end())
                throw ConfigError("methods[" + std::to_string(i) + "]", "duplicate method");
            config.methods.push_back(m);
        }
    }

    std::string out = config.output_dir.string();
    r.read("output_dir", out);
    config.output_dir = out;

    if (const json* run = r.get("run"))
        parse_run(*run, "run", config.base);
    else
        parse_run(json::object(), "run", config.base);
    r.finish();
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string(), "cannot open config file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string(), std::string("parse error: ") + e.what());
    }
    return parse_config(j);
}

namespace {

json domain_json(const domains::DomainSpec& spec, bool with_seed)
{
    json d;
    d["name"] = spec.name;
    if (spec.name == "vector-pair") {
        d["params"] = {{"sigma", spec.vector_pair.sigma},
                       {"full_mutation_rate", spec.vector_pair.full_mutation_rate},
                       {"theme_scale", spec.vector_pair.theme_scale}};
    } else {
        d["params"] = {{"image_size", spec.toy_media.image_size},
                       {"noise_sigma", spec.toy_media.noise_sigma},
                       {"full_mutation_rate", spec.toy_media.full_mutation_rate}};
    }
    if (with_seed)
        d["domain_seed"] = spec.domain_seed;
    return d;
}

json run_json(const RunSpec& spec, bool with_domain_seed)
{
    return {{"domain", domain_json(spec.domain, with_domain_seed)},
            {"selection", to_string(spec.algorithm.selection.kind)},
            {"ucb_c", spec.algorithm.selection.ucb_c},
            {"axis_sizes", spec.axis_sizes},
            {"init_count", spec.algorithm.init_count},
            {"steps", spec.algorithm.steps},
            {"seed", spec.seed},
            {"snapshot_every", spec.algorithm.snapshot_every}};
}

} // namespace

json to_json(const ExperimentConfig& config)
{
    json labels = json::array();
    for (const auto& l : config.labels)
        labels.push_back({{"name", l.name}, {"domain_seed", l.domain_seed}});
    json methods = json::array();
    for (auto m : config.methods)
        methods.push_back(to_string(m));
    return {{"labels", labels},
            {"runs_per_method", config.runs_per_method},
            {"methods", methods},
            {"output_dir", config.output_dir.string()},
            {"run", run_json(config.base, false)}};
}

RunSpec derive_run(const ExperimentConfig& config, const Label& label, Method method, std::size_t run_index)
{
    RunSpec spec = config.base;
    spec.domain.domain_seed = label.domain_seed;
    spec.algorithm.method = method;
    spec.algorithm.transverse = true;
    spec.seed = config.base.seed + run_index;
    return spec;
}

json to_json(const RunSpec& spec)
{
    json j = run_json(spec, true);
    j["method"] = to_string(spec.algorithm.method);
    return j;
}

std::string config_hash(const json& j)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

} // namespace melita::harness
