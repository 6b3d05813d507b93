#ifndef GRAPHLAB_TEST_SUPPORT_HPP
#define GRAPHLAB_TEST_SUPPORT_HPP

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "graphlab/graph.hpp"

namespace graphlab::test {

inline std::filesystem::path data_file(const std::string& name) {
    const char* dir = std::getenv("GRAPHLAB_DATA_DIR");
    return std::filesystem::path(dir ? dir : "data") / name;
}

inline Graph complete_graph(VertexId n) {
    std::vector<EdgePair> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph path_graph(VertexId n) {
    std::vector<EdgePair> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

inline Graph star_graph(VertexId leaves) {
    std::vector<EdgePair> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

// O(n^3) triangle count by direct triple enumeration; kept independent of
// the clustering implementation.
inline std::uint64_t enumerate_triangles(const Graph& g) {
    std::uint64_t count = 0;
    const VertexId n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
                    ++count;
    return count;
}

// Floyd-Warshall all-pairs distances (-1 = unreachable); independent of the
// BFS used by char_path_length.
inline std::vector<std::vector<int>> fw_distances(const Graph& g) {
    const VertexId n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (VertexId v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (VertexId k = 0; k < n; ++k)
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            if (d[i][j] >= inf) d[i][j] = -1;
    return d;
}

}  // namespace graphlab::test

#endif
