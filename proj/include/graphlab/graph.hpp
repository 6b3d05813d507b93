#ifndef GRAPHLAB_GRAPH_HPP
#define GRAPHLAB_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphlab {

using VertexId = std::uint32_t;

// Undirected pair, stored canonically as (min, max).
using EdgePair = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph: a vertex count plus a canonical
// (sorted, deduplicated) edge set.  Isolated vertices are allowed, so the
// vertex count may exceed the number of touched vertices.  All read
// accessors are safe for concurrent use.
class Graph {
public:
    enum class Dedup {
        Strict,   // self-loops and duplicate pairs are errors
        Lenient,  // self-loops dropped, duplicates merged
    };

    Graph() = default;

    // Validates endpoints, canonicalizes pair order, sorts, and (in strict
    // mode) rejects self-loops and duplicates.
    Graph(VertexId vertex_count, std::vector<EdgePair> edges,
          Dedup mode = Dedup::Strict);

    static Graph from_edge_list(VertexId vertex_count,
                                std::span<const EdgePair> pairs,
                                Dedup mode = Dedup::Strict);

    VertexId vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Canonical edge order: lexicographic by (min endpoint, max endpoint).
    const std::vector<EdgePair>& edges() const noexcept { return edges_; }

    // Sorted neighbor list of v.
    std::span<const VertexId> neighbors(VertexId v) const;

    VertexId degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    bool has_vertex(VertexId v) const noexcept { return v < vertex_count_; }

    bool operator==(const Graph& other) const noexcept {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    void build_adjacency();

    VertexId vertex_count_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::size_t> adj_offsets_;  // CSR offsets, size n+1
    std::vector<VertexId> adj_;             // concatenated sorted neighbor lists
};

// Entry i = number of edges incident to vertex i; sums to 2 * edge_count.
std::vector<VertexId> degree_sequence(const Graph& g);

// Dense symmetric binary matrix with zero diagonal; at(i, j) = 1 iff {i, j}
// is an edge.
struct AdjacencyMatrix {
    VertexId order = 0;
    std::vector<std::uint8_t> entries;  // row-major, order x order

    std::uint8_t at(VertexId i, VertexId j) const {
        return entries[static_cast<std::size_t>(i) * order + j];
    }
};

AdjacencyMatrix adjacency_matrix(const Graph& g);

// Binary vertex-by-edge matrix; column j has 1s exactly at the two
// endpoints of the j-th edge in canonical order.
struct IncidenceMatrix {
    VertexId rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> entries;  // row-major, rows x cols

    std::uint8_t at(VertexId i, std::size_t j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
};

IncidenceMatrix incidence_matrix(const Graph& g);

}  // namespace graphlab

#endif
