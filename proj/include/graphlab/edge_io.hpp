#ifndef GRAPHLAB_EDGE_IO_HPP
#define GRAPHLAB_EDGE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "graphlab/graph.hpp"

namespace graphlab {

// Edge-list text format: UTF-8, optional first non-comment line "n=<int>"
// declaring the vertex count (otherwise inferred as 1 + max index), one edge
// per line as two whitespace-separated 0-based indices, '#' starts a comment
// line.  Serialization is canonical: header first, then edges in
// lexicographic order, so parse(serialize(g)) == g bit-exactly.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text,
                      Graph::Dedup mode = Graph::Dedup::Strict);

Graph load_edge_list(const std::filesystem::path& path,
                     Graph::Dedup mode = Graph::Dedup::Strict);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

// JSON graph form: {"n": <int>, "edges": [[u, v], ...]} in canonical order.
std::string to_json(const Graph& g);
Graph parse_json(std::string_view text);

Graph load_graph(const std::filesystem::path& path);  // by extension (.json or edge list)
void save_graph(const Graph& g, const std::filesystem::path& path,
                std::string_view format);  // "edge-list" or "json"

}  // namespace graphlab

#endif
