#include <melita/harness/compare.hpp>
#include <melita/harness/serialization.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace melita::harness {

namespace fs = std::filesystem;

namespace {

std::map<std::string, std::vector<fs::path>> metrics_files(const fs::path& dir)
{
    if (!fs::is_directory(dir))
        throw std::runtime_error("not a directory: " + dir.string());
    std::map<std::string, std::vector<fs::path>> out;
    for (const auto& label_dir : fs::directory_iterator(dir)) {
        if (!label_dir.is_directory())
            continue;
        std::vector<fs::path> files;
        for (const auto& f : fs::directory_iterator(label_dir.path())) {
            const auto name = f.path().filename().string();
            if (f.is_regular_file() && name.size() > 12 && name.ends_with(".metrics.csv"))
                files.push_back(f.path());
        }
        std::sort(files.begin(), files.end());
        if (!files.empty())
            out[label_dir.path().filename().string()] = std::move(files);
    }
    return out;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

} // namespace

std::vector<std::pair<std::string, double>> summarize_series(std::span<const metrics::MetricsSample> series)
{
    const metrics::MetricsSample last = series.empty() ? metrics::MetricsSample{} : series.back();
    auto column = [&](auto member) {
        std::vector<double> v;
        v.reserve(series.size());
        for (const auto& s : series)
            v.push_back(s.*member);
        return metrics::auc(v);
    };
    using S = metrics::MetricsSample;
    return {{"final_mean_fitness", last.mean_fitness},
            {"final_max_fitness", last.max_fitness},
            {"final_coverage", last.coverage},
            {"final_qd_score", last.qd_score},
            {"auc_mean_fitness", column(&S::mean_fitness)},
            {"auc_max_fitness", column(&S::max_fitness)},
            {"auc_coverage", column(&S::coverage)},
            {"auc_qd_score", column(&S::qd_score)}};
}

ComparisonReport compare(const fs::path& dir_a, const fs::path& dir_b)
{
    const auto files_a = metrics_files(dir_a);
    const auto files_b = metrics_files(dir_b);
    ComparisonReport report;

    for (const auto& [label, _] : files_b)
        if (!files_a.contains(label))
            report.warnings.push_back("label '" + label + "' only present in " + dir_b.string());

    for (const auto& [label, paths_a] : files_a) {
        auto it = files_b.find(label);
        if (it == files_b.end()) {
            report.warnings.push_back("label '" + label + "' only present in " + dir_a.string());
            continue;
        }
        const auto& paths_b = it->second;
        if (paths_a.size() < 2 || paths_b.size() < 2)
            throw std::runtime_error("insufficient samples for label '" + label + "': need at least 2 runs per method");
        if (paths_a.size() != paths_b.size())
            report.warnings.push_back("label '" + label + "': run counts differ (" + std::to_string(paths_a.size()) +
                                      " vs " + std::to_string(paths_b.size()) + ")");

        std::map<std::string, std::vector<double>> values_a, values_b;
        std::vector<std::string> order;
        for (const auto& p : paths_a)
            for (const auto& [name, value] : summarize_series(load_metrics_csv(p))) {
                if (!values_a.contains(name))
                    order.push_back(name);
                values_a[name].push_back(value);
            }
        for (const auto& p : paths_b)
            for (const auto& [name, value] : summarize_series(load_metrics_csv(p)))
                values_b[name].push_back(value);

        for (const auto& name : order) {
            const auto& a = values_a[name];
            const auto& b = values_b[name];
            ComparisonRow row;
            row.label = label;
            row.metric = name;
            row.runs_a = a.size();
            row.runs_b = b.size();
            for (double x : a)
                row.mean_a += x / static_cast<double>(a.size());
            for (double x : b)
                row.mean_b += x / static_cast<double>(b.size());
            row.test = metrics::rank_sum_test(a, b);
            row.significant = row.test.p_two_tail < significance_level;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string comparison_csv(const ComparisonReport& report)
{
    std::string out = "label,metric,runs_a,runs_b,mean_a,mean_b,u,z,p_two_tail,significant\n";
    for (const auto& r : report.rows) {
        out += r.label + "," + r.metric + "," + std::to_string(r.runs_a) + "," + std::to_string(r.runs_b) + "," +
               fmt(r.mean_a) + "," + fmt(r.mean_b) + "," + fmt(r.test.u) + "," + fmt(r.test.z) + "," +
               fmt(r.test.p_two_tail) + "," + (r.significant ? "1" : "0") + "\n";
    }
    return out;
}

std::string comparison_summary(const ComparisonReport& report, const std::string& name_a, const std::string& name_b)
{
    std::string out;
    out += "# A = " + name_a + ", B = " + name_b + "\n";
    out += "# two-tailed Wilcoxon rank-sum (normal approximation), significance at p < 0.05\n";
    out += "# AUC = unit-step sum of the metric sampled after every parent selection\n";
    for (const auto& w : report.warnings)
        out += "warning: " + w + "\n";
    char line[256];
    std::string current;
    for (const auto& r : report.rows) {
        if (r.label != current) {
            current = r.label;
            out += "\n[" + current + "]\n";
            std::snprintf(line, sizeof line, "  %-20s %14s %14s %10s %10s\n", "metric", "mean A", "mean B", "U", "p");
            out += line;
        }
        std::snprintf(line, sizeof line, "  %-20s %14.6g %14.6g %10.1f %10.3g%s\n", r.metric.c_str(), r.mean_a,
                      r.mean_b, r.test.u, r.test.p_two_tail, r.significant ? (r.mean_a > r.mean_b ? "  * A" : "  * B") : "");
        out += line;
    }
    return out;
}

} // namespace melita::harness
