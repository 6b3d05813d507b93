#ifndef GRAPHLAB_STATISTICS_HPP
#define GRAPHLAB_STATISTICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "graphlab/graph.hpp"
#include "graphlab/rng.hpp"

namespace graphlab {

// Per-vertex triangle counts (lambda) and connected-triple counts (tau);
// tau(v) = deg(v) * (deg(v) - 1) / 2 always.
struct ClusteringCounts {
    std::vector<std::uint64_t> triangles;
    std::vector<std::uint64_t> triples;

    std::uint64_t triangle_total() const;  // sum(lambda) / 3
};

ClusteringCounts clustering_counts(const Graph& g);

// lambda(v) / tau(v); 0 when tau(v) = 0.
double clustering_local(const Graph& g, VertexId v);

// Transitivity: sum(lambda) / sum(tau); 0 when the denominator is 0.
double clustering_global(const Graph& g);

// Mean shortest-path distance over mutually reachable unordered pairs.
struct PathLengthStats {
    double mean = 0.0;
    std::uint64_t reachable_pairs = 0;
    std::uint64_t pair_count = 0;

    double reachable_fraction() const {
        return pair_count == 0 ? 0.0
                               : static_cast<double>(reachable_pairs) / pair_count;
    }
};

PathLengthStats char_path_length(const Graph& g);

// degree r -> number of vertices with that degree
using DegreeHistogram = std::map<VertexId, std::uint64_t>;

DegreeHistogram degree_histogram(const Graph& g);

// Total-variation distance between the normalized histogram and
// Poisson(lambda), truncated at the largest observed degree; the Poisson
// mass beyond the truncation counts fully toward the distance.
double poisson_tv_distance(const DegreeHistogram& hist, double lambda);

struct PowerLawFit {
    double gamma = 0.0;
    VertexId k_min = 1;
    double r2 = 0.0;
    std::size_t bins = 0;
};

// Least-squares slope on log-log points from base-2 logarithmically binned
// counts over degrees >= k_min.  A final bin truncated by the largest
// observed degree is dropped once two complete bins are available.
PowerLawFit powerlaw_fit(const DegreeHistogram& hist, VertexId k_min);

struct WsCurvePoint {
    double beta = 0.0;
    double l_ratio = 0.0;
    double c_ratio = 0.0;
    std::uint32_t trials = 0;
};

// Mean L(beta)/L(0) and C(beta)/C(0) per grid point, with the baselines
// taken from the deterministic lattice.  Trial i of grid point b uses
// stream b * trials + i; trials run concurrently.
std::vector<WsCurvePoint> ws_curves(VertexId n, VertexId k,
                                    std::span<const double> beta_grid,
                                    std::uint32_t trials, Seed seed);

// CSV with header "beta,L_ratio,C_ratio,trials".
std::string ws_curves_csv(std::span<const WsCurvePoint> points);

}  // namespace graphlab

#endif
