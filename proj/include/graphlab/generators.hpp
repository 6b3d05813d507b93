#ifndef GRAPHLAB_GENERATORS_HPP
#define GRAPHLAB_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graphlab/graph.hpp"
#include "graphlab/rng.hpp"

namespace graphlab {

// G(n, M): uniform over all M-subsets of the n*(n-1)/2 vertex pairs.
struct GnmParams {
    VertexId n = 0;
    std::uint64_t m = 0;
};

// G(n, p): each pair is an edge independently with probability p.
struct GnpParams {
    VertexId n = 0;
    double p = 0.0;
};

// Watts-Strogatz: ring lattice of even degree k, rewired with probability
// beta per lattice edge.
struct WsParams {
    VertexId n = 0;
    VertexId k = 0;
    double beta = 0.0;
};

// Barabasi-Albert: ring seed on m0 vertices, then t growth steps attaching
// each new vertex to m distinct existing vertices, degree-proportionally.
struct BaParams {
    VertexId m0 = 0;
    VertexId m = 0;
    std::uint32_t t = 0;
};

// Two Bernoulli(p) graphs on one vertex set with per-pair edge-indicator
// correlation rho.
struct CorrPairParams {
    VertexId n = 0;
    double p = 0.0;
    double rho = 0.0;
};

// Symmetric matrix of per-pair edge probabilities with zero diagonal.
class BernoulliMatrix {
public:
    explicit BernoulliMatrix(VertexId order);
    static BernoulliMatrix constant(VertexId order, double p);
    // p_within on pairs inside each half [0, n/2) and [n/2, n), p_across on
    // pairs straddling the halves.
    static BernoulliMatrix two_block(VertexId order, double p_within,
                                     double p_across);

    VertexId order() const noexcept { return order_; }
    double at(VertexId i, VertexId j) const;
    void set(VertexId i, VertexId j, double p);  // sets both (i,j) and (j,i)

private:
    VertexId order_ = 0;
    std::vector<double> probs_;  // row-major, order x order
};

Graph gen_gnm(const GnmParams& params, Seed seed);
Graph gen_gnp(const GnpParams& params, Seed seed);
Graph gen_ws(const WsParams& params, Seed seed);
Graph gen_ba(const BaParams& params, Seed seed);
std::pair<Graph, Graph> gen_correlated_pair(const CorrPairParams& params,
                                            Seed seed);
std::pair<Graph, Graph> gen_bernoulli_matrix(const BernoulliMatrix& probs,
                                             double rho, Seed seed);

// Single-graph null models, usable as ensemble references.
using ModelParams = std::variant<GnmParams, GnpParams, WsParams, BaParams>;

Graph sample_model(const ModelParams& model, Seed seed);
std::string model_name(const ModelParams& model);

}  // namespace graphlab

#endif
