#include "graphlab/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_set>

namespace graphlab {

namespace {

std::uint64_t pair_count(VertexId n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Inverse of the lexicographic pair enumeration: index -> (u, v), u < v.
EdgePair pair_from_index(VertexId n, std::uint64_t idx) {
    VertexId u = 0;
    std::uint64_t row = n - 1;  // pairs with min endpoint u
    while (idx >= row) {
        idx -= row;
        ++u;
        --row;
    }
    return {u, static_cast<VertexId>(u + 1 + idx)};
}

void check_probability(double p, const char* op) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(op) + ": probability " +
                                    std::to_string(p) + " outside [0,1]");
}

// One draw of two Bernoulli(p) indicators with correlation rho:
// X1 ~ Bernoulli(p); X2 ~ Bernoulli(p + rho*(1-p)) if X1 else
// Bernoulli(p*(1-rho)).  Marginals are Bernoulli(p) and the Pearson
// correlation is exactly rho.
std::pair<bool, bool> correlated_bernoulli(Rng& rng, double p, double rho) {
    const bool x1 = rng.bernoulli(p);
    const bool x2 = rng.bernoulli(x1 ? p + rho * (1.0 - p) : p * (1.0 - rho));
    return {x1, x2};
}

}  // namespace

BernoulliMatrix::BernoulliMatrix(VertexId order)
    : order_(order), probs_(static_cast<std::size_t>(order) * order, 0.0) {}

BernoulliMatrix BernoulliMatrix::constant(VertexId order, double p) {
    check_probability(p, "BernoulliMatrix::constant");
    BernoulliMatrix m(order);
    for (VertexId i = 0; i < order; ++i)
        for (VertexId j = i + 1; j < order; ++j) m.set(i, j, p);
    return m;
}

BernoulliMatrix BernoulliMatrix::two_block(VertexId order, double p_within,
                                           double p_across) {
    check_probability(p_within, "BernoulliMatrix::two_block");
    check_probability(p_across, "BernoulliMatrix::two_block");
    BernoulliMatrix m(order);
    const VertexId half = order / 2;
    for (VertexId i = 0; i < order; ++i)
        for (VertexId j = i + 1; j < order; ++j)
            m.set(i, j, (i < half) == (j < half) ? p_within : p_across);
    return m;
}

double BernoulliMatrix::at(VertexId i, VertexId j) const {
    if (i >= order_ || j >= order_)
        throw std::out_of_range("BernoulliMatrix::at: index out of range");
    return probs_[static_cast<std::size_t>(i) * order_ + j];
}

void BernoulliMatrix::set(VertexId i, VertexId j, double p) {
    if (i >= order_ || j >= order_)
        throw std::out_of_range("BernoulliMatrix::set: index out of range");
    if (i == j)
        throw std::invalid_argument("BernoulliMatrix::set: diagonal must stay zero");
    check_probability(p, "BernoulliMatrix::set");
    probs_[static_cast<std::size_t>(i) * order_ + j] = p;
    probs_[static_cast<std::size_t>(j) * order_ + i] = p;
}

Graph gen_gnm(const GnmParams& params, Seed seed) {
    const std::uint64_t total = pair_count(params.n);
    if (params.m > total)
        throw std::invalid_argument("gen_gnm: M=" + std::to_string(params.m) +
                                    " exceeds " + std::to_string(total) +
                                    " possible pairs");
    Rng rng(seed);
    // Floyd's subset sampling: uniform over all M-subsets of pair indices.
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(params.m * 2);
    for (std::uint64_t j = total - params.m; j < total; ++j) {
        const std::uint64_t r = rng.below(j + 1);
        chosen.insert(chosen.contains(r) ? j : r);
    }
    std::vector<EdgePair> edges;
    edges.reserve(params.m);
    for (std::uint64_t idx : chosen) edges.push_back(pair_from_index(params.n, idx));
    return Graph(params.n, std::move(edges));
}

Graph gen_gnp(const GnpParams& params, Seed seed) {
    check_probability(params.p, "gen_gnp");
    Rng rng(seed);
    std::vector<EdgePair> edges;
    for (VertexId u = 0; u < params.n; ++u)
        for (VertexId v = u + 1; v < params.n; ++v)
            if (rng.bernoulli(params.p)) edges.emplace_back(u, v);
    return Graph(params.n, std::move(edges));
}

Graph gen_ws(const WsParams& params, Seed seed) {
    if (params.k < 2 || params.k >= params.n || params.k % 2 != 0)
        throw std::invalid_argument("gen_ws: k must be even with 2 <= k < n");
    check_probability(params.beta, "gen_ws");
    const VertexId n = params.n;
    Rng rng(seed);

    // Ring lattice: each vertex joined to its k/2 nearest neighbors per side.
    std::vector<std::vector<VertexId>> nbrs(n);
    auto connected = [&](VertexId a, VertexId b) {
        return std::find(nbrs[a].begin(), nbrs[a].end(), b) != nbrs[a].end();
    };
    auto link = [&](VertexId a, VertexId b) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    };
    auto unlink = [&](VertexId a, VertexId b) {
        std::erase(nbrs[a], b);
        std::erase(nbrs[b], a);
    };
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 1; j <= params.k / 2; ++j) link(i, (i + j) % n);

    // Lap-by-lap rewiring: each lattice edge {i, i+j} is replaced, with
    // probability beta, by {i, w} with w uniform over the vertices that are
    // neither i nor a current neighbor of i.  Skipping when no candidate
    // exists preserves the edge count n*k/2.
    if (params.beta > 0.0) {
        for (VertexId j = 1; j <= params.k / 2; ++j) {
            for (VertexId i = 0; i < n; ++i) {
                if (!rng.bernoulli(params.beta)) continue;
                const VertexId v = (i + j) % n;
                const std::uint64_t candidates = n - 1 - nbrs[i].size();
                if (candidates == 0) continue;
                std::uint64_t target = rng.below(candidates);
                VertexId w = n;
                for (VertexId x = 0; x < n; ++x) {
                    if (x == i || connected(i, x)) continue;
                    if (target-- == 0) {
                        w = x;
                        break;
                    }
                }
                unlink(i, v);
                link(i, w);
            }
        }
    }

    std::vector<EdgePair> edges;
    edges.reserve(static_cast<std::size_t>(n) * params.k / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : nbrs[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_ba(const BaParams& params, Seed seed) {
    if (params.m0 < 1 || params.m < 1 || params.m > params.m0)
        throw std::invalid_argument("gen_ba: need 1 <= m <= m0");
    Rng rng(seed);

    std::vector<EdgePair> edges;
    edges.reserve(static_cast<std::size_t>(params.m0) +
                  static_cast<std::size_t>(params.m) * params.t);
    // Each edge contributes both endpoints; drawing uniformly from this list
    // is degree-proportional sampling.
    std::vector<VertexId> endpoints;
    auto add_edge = [&](VertexId a, VertexId b) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
    };

    // Ring seed (degenerate for m0 <= 2: single edge or a lone vertex).
    if (params.m0 == 2) {
        add_edge(0, 1);
    } else if (params.m0 >= 3) {
        for (VertexId i = 0; i < params.m0; ++i) add_edge(i, (i + 1) % params.m0);
    }
    for (const auto& [u, v] : edges) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }

    VertexId next = params.m0;
    std::vector<VertexId> chosen;
    for (std::uint32_t step = 0; step < params.t; ++step, ++next) {
        chosen.clear();
        // Targets are distinct and drawn against pre-step degrees: endpoints
        // of this step's new edges are appended only after the step.
        while (chosen.size() < params.m) {
            VertexId cand;
            if (endpoints.empty())
                cand = static_cast<VertexId>(rng.below(next));  // all degrees zero
            else
                cand = endpoints[rng.below(endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end())
                chosen.push_back(cand);
        }
        for (VertexId c : chosen) add_edge(next, c);
        for (VertexId c : chosen) {
            endpoints.push_back(next);
            endpoints.push_back(c);
        }
    }
    return Graph(next, std::move(edges));
}

std::pair<Graph, Graph> gen_correlated_pair(const CorrPairParams& params,
                                            Seed seed) {
    check_probability(params.p, "gen_correlated_pair");
    check_probability(params.rho, "gen_correlated_pair");
    Rng rng(seed);
    std::vector<EdgePair> e1, e2;
    for (VertexId u = 0; u < params.n; ++u) {
        for (VertexId v = u + 1; v < params.n; ++v) {
            const auto [x1, x2] = correlated_bernoulli(rng, params.p, params.rho);
            if (x1) e1.emplace_back(u, v);
            if (x2) e2.emplace_back(u, v);
        }
    }
    return {Graph(params.n, std::move(e1)), Graph(params.n, std::move(e2))};
}

std::pair<Graph, Graph> gen_bernoulli_matrix(const BernoulliMatrix& probs,
                                             double rho, Seed seed) {
    check_probability(rho, "gen_bernoulli_matrix");
    Rng rng(seed);
    const VertexId n = probs.order();
    std::vector<EdgePair> e1, e2;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const auto [x1, x2] = correlated_bernoulli(rng, probs.at(u, v), rho);
            if (x1) e1.emplace_back(u, v);
            if (x2) e2.emplace_back(u, v);
        }
    }
    return {Graph(n, std::move(e1)), Graph(n, std::move(e2))};
}

Graph sample_model(const ModelParams& model, Seed seed) {
    return std::visit(
        [&](const auto& p) -> Graph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GnmParams>)
                return gen_gnm(p, seed);
            else if constexpr (std::is_same_v<T, GnpParams>)
                return gen_gnp(p, seed);
            else if constexpr (std::is_same_v<T, WsParams>)
                return gen_ws(p, seed);
            else
                return gen_ba(p, seed);
        },
        model);
}

std::string model_name(const ModelParams& model) {
    struct Namer {
        std::string operator()(const GnmParams&) const { return "er-gnm"; }
        std::string operator()(const GnpParams&) const { return "er-gnp"; }
        std::string operator()(const WsParams&) const { return "ws"; }
        std::string operator()(const BaParams&) const { return "ba"; }
    };
    return std::visit(Namer{}, model);
}

}  // namespace graphlab
