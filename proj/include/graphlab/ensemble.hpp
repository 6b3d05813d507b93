#ifndef GRAPHLAB_ENSEMBLE_HPP
#define GRAPHLAB_ENSEMBLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlab/generators.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/rng.hpp"

namespace graphlab {

// A named, deterministic structural characteristic of a graph.
struct Characteristic {
    std::string name;
    std::function<double(const Graph&)> evaluate;
};

// Built-ins: "edges", "clustering", "path-length", "max-degree".
Characteristic make_characteristic(std::string_view name);
std::vector<std::string> characteristic_names();

struct EnsembleSummary {
    ModelParams model;
    std::uint32_t count = 0;
    std::vector<double> values;  // sorted ascending
    Characteristic eta;
};

// count independent samples, sample i seeded with stream seed.stream + i;
// sampling runs concurrently and the sorted values are schedule-independent.
EnsembleSummary build_ensemble(const ModelParams& model, std::uint32_t count,
                               Characteristic eta, Seed seed);

// Empirical CDF: fraction of ensemble values <= t.
double tail_probability(const EnsembleSummary& summary, double t);

struct SignificanceReport {
    double observed = 0.0;
    double p_lower = 0.0;
    double p_upper = 0.0;
    double p_two_sided = 0.0;
};

// Add-one p-values: lower = (1 + #{values <= v}) / (count + 1), upper
// likewise with >=, two-sided = min(1, 2 min(lower, upper)).
SignificanceReport significance(const EnsembleSummary& summary,
                                const Graph& observed);

// CSV with header
// "statistic,observed,ensemble_count,p_lower,p_upper,p_two_sided".
std::string significance_csv(const EnsembleSummary& summary,
                             const SignificanceReport& report);

}  // namespace graphlab

#endif
