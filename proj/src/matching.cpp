#include "graphlab/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace graphlab {

Bijection::Bijection(std::vector<VertexId> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (VertexId image : mapping_) {
        if (image >= mapping_.size() || seen[image])
            throw std::invalid_argument("Bijection: mapping is not a permutation");
        seen[image] = true;
    }
}

Bijection Bijection::identity(std::size_t n) {
    std::vector<VertexId> mapping(n);
    std::iota(mapping.begin(), mapping.end(), VertexId{0});
    return Bijection(std::move(mapping));
}

Bijection Bijection::random(std::size_t n, Rng& rng) {
    std::vector<VertexId> mapping(n);
    std::iota(mapping.begin(), mapping.end(), VertexId{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(mapping[i - 1], mapping[rng.below(i)]);
    return Bijection(std::move(mapping));
}

Bijection Bijection::inverse() const {
    std::vector<VertexId> inv(mapping_.size());
    for (std::size_t v = 0; v < mapping_.size(); ++v)
        inv[mapping_[v]] = static_cast<VertexId>(v);
    return Bijection(std::move(inv));
}

std::uint64_t disagreements(const Graph& g1, const Graph& g2,
                            const Bijection& psi) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("disagreements: graphs differ in order");
    if (psi.size() != g1.vertex_count())
        throw std::invalid_argument("disagreements: bijection size mismatch");
    // Delta = |E1| + |E2| - 2 |psi(E1) intersect E2|
    std::uint64_t shared = 0;
    for (const auto& [u, v] : g1.edges())
        if (g2.has_edge(psi(u), psi(v))) ++shared;
    return g1.edge_count() + g2.edge_count() - 2 * shared;
}

std::uint64_t mismatch_count(const Bijection& psi, const Bijection& phi) {
    if (psi.size() != phi.size())
        throw std::invalid_argument("mismatch_count: length mismatch");
    std::uint64_t count = 0;
    for (std::size_t v = 0; v < psi.size(); ++v)
        if (psi.mapping()[v] != phi.mapping()[v]) ++count;
    return count;
}

std::optional<std::uint64_t> MatchResult::mismatches_vs(const Bijection& phi) const {
    if (phi.size() != best.size()) return std::nullopt;
    return mismatch_count(best, phi);
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> rows(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return rows;
}

// Depth-first search over partial assignments in lexicographic image order.
// Disagreements only accumulate, so partials above the incumbent are pruned
// (strictly above in all-minimizers mode, to keep ties alive).
class ExactSearch {
public:
    ExactSearch(const Graph& g1, const Graph& g2, bool all_minimizers)
        : n_(g1.vertex_count()),
          rows1_(adjacency_masks(g1)),
          rows2_(adjacency_masks(g2)),
          all_minimizers_(all_minimizers) {
        images_.resize(n_);
        used_.assign(n_, false);
        best_cost_ = ~std::uint64_t{0};
    }

    void run() { descend(0, 0); }

    std::uint64_t best_cost() const { return best_cost_; }
    const std::vector<VertexId>& best() const { return best_images_; }
    std::vector<std::vector<VertexId>> take_minimizers() {
        return std::move(minimizer_images_);
    }

private:
    void descend(VertexId v, std::uint64_t cost) {
        if (v == n_) {
            if (cost < best_cost_) {
                best_cost_ = cost;
                best_images_ = images_;
                if (all_minimizers_) minimizer_images_ = {images_};
            } else if (all_minimizers_ && cost == best_cost_) {
                minimizer_images_.push_back(images_);
            }
            return;
        }
        for (VertexId w = 0; w < n_; ++w) {
            if (used_[w]) continue;
            // Pairs {v, v'} for assigned v': indicator in g1 vs mapped g2.
            std::uint64_t g2_bits = 0;
            for (VertexId prev = 0; prev < v; ++prev)
                g2_bits |= ((rows2_[w] >> images_[prev]) & 1u) << prev;
            const std::uint64_t g1_bits = rows1_[v] & ((std::uint64_t{1} << v) - 1);
            const std::uint64_t added = std::popcount(g1_bits ^ g2_bits);
            const std::uint64_t next_cost = cost + added;
            const bool viable = all_minimizers_ ? next_cost <= best_cost_
                                                : next_cost < best_cost_;
            if (!viable) continue;
            used_[w] = true;
            images_[v] = w;
            descend(v + 1, next_cost);
            used_[w] = false;
        }
    }

    VertexId n_;
    std::vector<std::uint64_t> rows1_, rows2_;
    bool all_minimizers_;
    std::vector<VertexId> images_;
    std::vector<bool> used_;
    std::uint64_t best_cost_;
    std::vector<VertexId> best_images_;
    std::vector<std::vector<VertexId>> minimizer_images_;
};

}  // namespace

MatchResult exact_gmp(const Graph& g1, const Graph& g2,
                      const ExactGmpOptions& options) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("exact_gmp: graphs differ in order");
    const VertexId n = g1.vertex_count();
    if (n > options.limit)
        throw std::invalid_argument("exact_gmp: n=" + std::to_string(n) +
                                    " above exhaustive limit " +
                                    std::to_string(options.limit));
    if (n > 64)
        throw std::invalid_argument("exact_gmp: n above bitmask width 64");
    if (n == 0) {
        MatchResult r{Bijection::identity(0), 0, true, {}};
        if (options.all_minimizers) r.minimizers.push_back(Bijection::identity(0));
        return r;
    }

    ExactSearch search(g1, g2, options.all_minimizers);
    search.run();

    MatchResult result{Bijection(search.best()), search.best_cost(), true, {}};
    if (options.all_minimizers) {
        for (auto& images : search.take_minimizers())
            result.minimizers.emplace_back(std::move(images));
    }
    return result;
}

namespace {

// Degree-profile start: vertices of both graphs sorted by degree with a
// fresh random tie-break inside each degree class, matched rank-by-rank.
// Purely structural, so the latent alignment stays hidden from the search.
std::vector<VertexId> degree_seeded_images(const Graph& g1, const Graph& g2,
                                           Rng& rng) {
    const VertexId n = g1.vertex_count();
    auto ranked = [&](const Graph& g) {
        std::vector<std::pair<std::uint64_t, VertexId>> keyed(n);
        for (VertexId v = 0; v < n; ++v)
            keyed[v] = {(static_cast<std::uint64_t>(g.degree(v)) << 32) |
                            rng.below(std::uint64_t{1} << 32),
                        v};
        std::sort(keyed.begin(), keyed.end());
        std::vector<VertexId> order(n);
        for (VertexId i = 0; i < n; ++i) order[i] = keyed[i].second;
        return order;
    };
    const auto o1 = ranked(g1);
    const auto o2 = ranked(g2);
    std::vector<VertexId> images(n);
    for (VertexId i = 0; i < n; ++i) images[o1[i]] = o2[i];
    return images;
}

// Cost change from swapping the images of positions a and b: only pairs
// involving a or b are affected, and the {a, b} pair itself is invariant.
std::int64_t swap_delta(const AdjacencyMatrix& a1, const AdjacencyMatrix& a2,
                        const std::vector<VertexId>& images, VertexId a,
                        VertexId b) {
    const VertexId n = a1.order;
    const VertexId ia = images[a], ib = images[b];
    std::int64_t delta = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (v == a || v == b) continue;
        const VertexId iv = images[v];
        const std::uint8_t e1a = a1.at(a, v), e1b = a1.at(b, v);
        delta += (e1a != a2.at(ib, iv)) - (e1a != a2.at(ia, iv));
        delta += (e1b != a2.at(ia, iv)) - (e1b != a2.at(ib, iv));
    }
    return delta;
}

}  // namespace

MatchResult local_search_gmp(const Graph& g1, const Graph& g2,
                             std::uint32_t restarts, Seed seed) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("local_search_gmp: graphs differ in order");
    if (restarts == 0)
        throw std::invalid_argument("local_search_gmp: restarts must be >= 1");
    const VertexId n = g1.vertex_count();
    const AdjacencyMatrix a1 = adjacency_matrix(g1);
    const AdjacencyMatrix a2 = adjacency_matrix(g2);

    std::vector<VertexId> best_images;
    std::uint64_t best_cost = ~std::uint64_t{0};
    for (std::uint32_t r = 0; r < restarts; ++r) {
        Rng rng(seed.with_stream(seed.stream + r));
        std::vector<VertexId> images = degree_seeded_images(g1, g2, rng);
        std::uint64_t cost = disagreements(g1, g2, Bijection(images));

        // Best-improvement descent over all transpositions.
        for (;;) {
            std::int64_t best_delta = 0;
            VertexId best_a = 0, best_b = 0;
            for (VertexId a = 0; a < n; ++a) {
                for (VertexId b = a + 1; b < n; ++b) {
                    const std::int64_t d = swap_delta(a1, a2, images, a, b);
                    if (d < best_delta) {
                        best_delta = d;
                        best_a = a;
                        best_b = b;
                    }
                }
            }
            if (best_delta >= 0) break;
            std::swap(images[best_a], images[best_b]);
            cost = static_cast<std::uint64_t>(
                static_cast<std::int64_t>(cost) + best_delta);
        }
        if (cost < best_cost) {
            best_cost = cost;
            best_images = images;
        }
    }
    return MatchResult{Bijection(std::move(best_images)), best_cost, false, {}};
}

}  // namespace graphlab
