#include "graphlab/ensemble.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphlab/format.hpp"
#include "graphlab/parallel.hpp"
#include "graphlab/statistics.hpp"

namespace graphlab {

Characteristic make_characteristic(std::string_view name) {
    if (name == "edges")
        return {"edges", [](const Graph& g) {
                    return static_cast<double>(g.edge_count());
                }};
    if (name == "clustering")
        return {"clustering", [](const Graph& g) { return clustering_global(g); }};
    if (name == "path-length")
        return {"path-length",
                [](const Graph& g) { return char_path_length(g).mean; }};
    if (name == "max-degree")
        return {"max-degree", [](const Graph& g) {
                    double max_deg = 0.0;
                    for (VertexId v = 0; v < g.vertex_count(); ++v)
                        max_deg = std::max(max_deg, static_cast<double>(g.degree(v)));
                    return max_deg;
                }};
    throw std::invalid_argument("make_characteristic: unknown statistic '" +
                                std::string(name) + "'");
}

std::vector<std::string> characteristic_names() {
    return {"edges", "clustering", "path-length", "max-degree"};
}

EnsembleSummary build_ensemble(const ModelParams& model, std::uint32_t count,
                               Characteristic eta, Seed seed) {
    if (count < 1)
        throw std::invalid_argument("build_ensemble: count must be >= 1");
    if (!eta.evaluate)
        throw std::invalid_argument("build_ensemble: characteristic missing");
    std::vector<double> values(count);
    parallel_for(count, [&](std::size_t i) {
        values[i] = eta.evaluate(sample_model(model, seed.with_stream(seed.stream + i)));
    });
    std::sort(values.begin(), values.end());
    return {model, count, std::move(values), std::move(eta)};
}

double tail_probability(const EnsembleSummary& summary, double t) {
    if (summary.values.empty())
        throw std::invalid_argument("tail_probability: empty ensemble");
    const auto upper = std::upper_bound(summary.values.begin(),
                                        summary.values.end(), t);
    return static_cast<double>(upper - summary.values.begin()) /
           static_cast<double>(summary.values.size());
}

SignificanceReport significance(const EnsembleSummary& summary,
                                const Graph& observed) {
    if (summary.values.empty())
        throw std::invalid_argument("significance: empty ensemble");
    if (!summary.eta.evaluate)
        throw std::invalid_argument("significance: characteristic missing");
    const double v = summary.eta.evaluate(observed);
    const auto& values = summary.values;
    const auto at_most =
        std::upper_bound(values.begin(), values.end(), v) - values.begin();
    const auto below = std::lower_bound(values.begin(), values.end(), v) -
                       values.begin();
    const auto at_least = static_cast<std::int64_t>(values.size()) - below;
    const double denom = static_cast<double>(values.size()) + 1.0;
    SignificanceReport report;
    report.observed = v;
    report.p_lower = (1.0 + static_cast<double>(at_most)) / denom;
    report.p_upper = (1.0 + static_cast<double>(at_least)) / denom;
    report.p_two_sided = std::min(1.0, 2.0 * std::min(report.p_lower, report.p_upper));
    return report;
}

std::string significance_csv(const EnsembleSummary& summary,
                             const SignificanceReport& report) {
    std::string csv = "statistic,observed,ensemble_count,p_lower,p_upper,p_two_sided\n";
    csv += summary.eta.name;
    csv += ',';
    csv += format_full(report.observed);
    csv += ',';
    csv += std::to_string(summary.count);
    csv += ',';
    csv += format_full(report.p_lower);
    csv += ',';
    csv += format_full(report.p_upper);
    csv += ',';
    csv += format_full(report.p_two_sided);
    csv += '\n';
    return csv;
}

}  // namespace graphlab
