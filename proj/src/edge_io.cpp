#include "graphlab/edge_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace graphlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t lineno) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("parse_edge_list: bad integer '" +
                                    std::string(tok) + "' on line " +
                                    std::to_string(lineno));
    return value;
}

}  // namespace

std::string to_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_edge_list(std::string_view text, Graph::Dedup mode) {
    std::vector<EdgePair> pairs;
    bool have_n = false;
    std::uint64_t declared_n = 0;
    std::uint64_t max_index = 0;
    bool any_edge = false;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        if (!have_n && !any_edge && line.starts_with("n=")) {
            declared_n = parse_u64(trim(line.substr(2)), lineno);
            have_n = true;
            continue;
        }
        std::istringstream ss{std::string(line)};
        std::string a, b, extra;
        if (!(ss >> a >> b) || (ss >> extra))
            throw std::invalid_argument(
                "parse_edge_list: expected 'u v' on line " + std::to_string(lineno));
        const std::uint64_t u = parse_u64(a, lineno);
        const std::uint64_t v = parse_u64(b, lineno);
        max_index = std::max({max_index, u, v});
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        any_edge = true;
    }

    const std::uint64_t n = have_n ? declared_n : (any_edge ? max_index + 1 : 0);
    return Graph(static_cast<VertexId>(n), std::move(pairs), mode);
}

Graph load_edge_list(const std::filesystem::path& path, Graph::Dedup mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("load_edge_list: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str(), mode);
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("save_edge_list: cannot open " + path.string());
    out << to_edge_list(g);
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph parse_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<EdgePair> pairs;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("parse_json: edges must be [u, v] pairs");
        pairs.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph(j.at("n").get<VertexId>(), std::move(pairs));
}

Graph load_graph(const std::filesystem::path& path) {
    if (path.extension() == ".json") {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("load_graph: cannot open " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_json(buf.str());
    }
    return load_edge_list(path);
}

void save_graph(const Graph& g, const std::filesystem::path& path,
                std::string_view format) {
    if (format == "json") {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("save_graph: cannot open " + path.string());
        out << to_json(g) << "\n";
    } else if (format == "edge-list") {
        save_edge_list(g, path);
    } else {
        throw std::invalid_argument("save_graph: unknown format '" +
                                    std::string(format) + "'");
    }
}

}  // namespace graphlab
