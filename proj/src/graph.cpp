#include "graphlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphlab {

Graph::Graph(VertexId vertex_count, std::vector<EdgePair> edges, Dedup mode)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u >= vertex_count_ || v >= vertex_count_)
            throw std::out_of_range("Graph: edge endpoint " +
                                    std::to_string(std::max(u, v)) +
                                    " out of range for n=" +
                                    std::to_string(vertex_count_));
        if (u == v) {
            if (mode == Dedup::Strict)
                throw std::invalid_argument("Graph: self-loop at vertex " +
                                            std::to_string(u));
        }
        if (u > v) std::swap(u, v);
    }
    if (mode == Dedup::Lenient) {
        std::erase_if(edges_, [](const EdgePair& e) { return e.first == e.second; });
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        if (mode == Dedup::Strict)
            throw std::invalid_argument("Graph: duplicate edge {" +
                                        std::to_string(dup->first) + "," +
                                        std::to_string(dup->second) + "}");
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    build_adjacency();
}

Graph Graph::from_edge_list(VertexId vertex_count,
                            std::span<const EdgePair> pairs, Dedup mode) {
    return Graph(vertex_count, std::vector<EdgePair>(pairs.begin(), pairs.end()),
                 mode);
}

void Graph::build_adjacency() {
    adj_offsets_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++adj_offsets_[u + 1];
        ++adj_offsets_[v + 1];
    }
    for (std::size_t i = 1; i < adj_offsets_.size(); ++i)
        adj_offsets_[i] += adj_offsets_[i - 1];
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < vertex_count_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= vertex_count_)
        throw std::out_of_range("Graph::neighbors: vertex " + std::to_string(v) +
                                " out of range");
    return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

VertexId Graph::degree(VertexId v) const {
    if (v >= vertex_count_)
        throw std::out_of_range("Graph::degree: vertex " + std::to_string(v) +
                                " out of range");
    return static_cast<VertexId>(adj_offsets_[v + 1] - adj_offsets_[v]);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count_ || v >= vertex_count_ || u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexId> degree_sequence(const Graph& g) {
    std::vector<VertexId> deg(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

AdjacencyMatrix adjacency_matrix(const Graph& g) {
    AdjacencyMatrix a;
    a.order = g.vertex_count();
    a.entries.assign(static_cast<std::size_t>(a.order) * a.order, 0);
    for (const auto& [u, v] : g.edges()) {
        a.entries[static_cast<std::size_t>(u) * a.order + v] = 1;
        a.entries[static_cast<std::size_t>(v) * a.order + u] = 1;
    }
    return a;
}

IncidenceMatrix incidence_matrix(const Graph& g) {
    IncidenceMatrix b;
    b.rows = g.vertex_count();
    b.cols = g.edge_count();
    b.entries.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        const auto& [u, v] = g.edges()[j];
        b.entries[static_cast<std::size_t>(u) * b.cols + j] = 1;
        b.entries[static_cast<std::size_t>(v) * b.cols + j] = 1;
    }
    return b;
}

}  // namespace graphlab
