#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "graphlab/alignment.hpp"
#include "graphlab/edge_io.hpp"
#include "graphlab/ensemble.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/matching.hpp"
#include "graphlab/statistics.hpp"

namespace py = pybind11;
using namespace graphlab;

namespace {

std::vector<std::vector<std::uint8_t>> matrix_rows(const AdjacencyMatrix& a) {
    std::vector<std::vector<std::uint8_t>> rows(a.order);
    for (VertexId i = 0; i < a.order; ++i) {
        rows[i].resize(a.order);
        for (VertexId j = 0; j < a.order; ++j) rows[i][j] = a.at(i, j);
    }
    return rows;
}

std::vector<std::vector<std::uint8_t>> matrix_rows(const IncidenceMatrix& b) {
    std::vector<std::vector<std::uint8_t>> rows(b.rows);
    for (VertexId i = 0; i < b.rows; ++i) {
        rows[i].resize(b.cols);
        for (std::size_t j = 0; j < b.cols; ++j) rows[i][j] = b.at(i, j);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Random-graph models, matching and ensemble significance";

    py::class_<Seed>(m, "Seed")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("master") = 0,
             py::arg("stream") = 0)
        .def_readwrite("master", &Seed::master)
        .def_readwrite("stream", &Seed::stream)
        .def("with_stream", &Seed::with_stream)
        .def("__repr__", [](const Seed& s) {
            return "Seed(master=" + std::to_string(s.master) +
                   ", stream=" + std::to_string(s.stream) + ")";
        });

    py::enum_<Graph::Dedup>(m, "Dedup")
        .value("STRICT", Graph::Dedup::Strict)
        .value("LENIENT", Graph::Dedup::Lenient);

    py::class_<Graph>(m, "Graph")
        .def(py::init<VertexId, std::vector<EdgePair>, Graph::Dedup>(),
             py::arg("vertex_count"), py::arg("edges"),
             py::arg("mode") = Graph::Dedup::Strict)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 const auto nb = g.neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("degree_sequence", &degree_sequence);
    m.def("adjacency_matrix",
          [](const Graph& g) { return matrix_rows(adjacency_matrix(g)); });
    m.def("incidence_matrix",
          [](const Graph& g) { return matrix_rows(incidence_matrix(g)); });

    // edge-list / JSON I/O
    m.def("to_edge_list", &to_edge_list);
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"),
          py::arg("mode") = Graph::Dedup::Strict);
    m.def("load_edge_list", &load_edge_list, py::arg("path"),
          py::arg("mode") = Graph::Dedup::Strict);
    m.def("save_edge_list", &save_edge_list, py::arg("graph"), py::arg("path"));
    m.def("to_json", &to_json);
    m.def("parse_json", &parse_json);

    // generators
    m.def("gen_gnm",
          [](VertexId n, std::uint64_t m_edges, Seed seed) {
              return gen_gnm({n, m_edges}, seed);
          },
          py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("gen_gnp",
          [](VertexId n, double p, Seed seed) { return gen_gnp({n, p}, seed); },
          py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_ws",
          [](VertexId n, VertexId k, double beta, Seed seed) {
              return gen_ws({n, k, beta}, seed);
          },
          py::arg("n"), py::arg("k"), py::arg("beta"), py::arg("seed"));
    m.def("gen_ba",
          [](VertexId m0, VertexId m, std::uint32_t t, Seed seed) {
              return gen_ba({m0, m, t}, seed);
          },
          py::arg("m0"), py::arg("m"), py::arg("t"), py::arg("seed"));
    m.def("gen_correlated_pair",
          [](VertexId n, double p, double rho, Seed seed) {
              return gen_correlated_pair({n, p, rho}, seed);
          },
          py::arg("n"), py::arg("p"), py::arg("rho"), py::arg("seed"));

    py::class_<BernoulliMatrix>(m, "BernoulliMatrix")
        .def(py::init<VertexId>(), py::arg("order"))
        .def_static("constant", &BernoulliMatrix::constant, py::arg("order"),
                    py::arg("p"))
        .def_static("two_block", &BernoulliMatrix::two_block, py::arg("order"),
                    py::arg("p_within"), py::arg("p_across"))
        .def_property_readonly("order", &BernoulliMatrix::order)
        .def("at", &BernoulliMatrix::at, py::arg("i"), py::arg("j"))
        .def("set", &BernoulliMatrix::set, py::arg("i"), py::arg("j"),
             py::arg("p"));

    m.def("gen_bernoulli_matrix", &gen_bernoulli_matrix, py::arg("probs"),
          py::arg("rho"), py::arg("seed"));

    // statistics
    py::class_<ClusteringCounts>(m, "ClusteringCounts")
        .def_readonly("triangles", &ClusteringCounts::triangles)
        .def_readonly("triples", &ClusteringCounts::triples)
        .def("triangle_total", &ClusteringCounts::triangle_total);
    m.def("clustering_counts", &clustering_counts);
    m.def("clustering_local", &clustering_local, py::arg("graph"), py::arg("v"));
    m.def("clustering_global", &clustering_global);

    py::class_<PathLengthStats>(m, "PathLengthStats")
        .def_readonly("mean", &PathLengthStats::mean)
        .def_readonly("reachable_pairs", &PathLengthStats::reachable_pairs)
        .def_readonly("pair_count", &PathLengthStats::pair_count)
        .def_property_readonly("reachable_fraction",
                               &PathLengthStats::reachable_fraction);
    m.def("char_path_length", &char_path_length);

    m.def("degree_histogram", &degree_histogram);
    m.def("poisson_tv_distance", &poisson_tv_distance, py::arg("histogram"),
          py::arg("lam"));

    py::class_<PowerLawFit>(m, "PowerLawFit")
        .def_readonly("gamma", &PowerLawFit::gamma)
        .def_readonly("k_min", &PowerLawFit::k_min)
        .def_readonly("r2", &PowerLawFit::r2)
        .def_readonly("bins", &PowerLawFit::bins);
    m.def("powerlaw_fit", &powerlaw_fit, py::arg("histogram"), py::arg("k_min"));

    py::class_<WsCurvePoint>(m, "WsCurvePoint")
        .def_readonly("beta", &WsCurvePoint::beta)
        .def_readonly("l_ratio", &WsCurvePoint::l_ratio)
        .def_readonly("c_ratio", &WsCurvePoint::c_ratio)
        .def_readonly("trials", &WsCurvePoint::trials);
    m.def("ws_curves",
          [](VertexId n, VertexId k, const std::vector<double>& grid,
             std::uint32_t trials, Seed seed) {
              return ws_curves(n, k, grid, trials, seed);
          },
          py::arg("n"), py::arg("k"), py::arg("beta_grid"), py::arg("trials"),
          py::arg("seed"));

    // matching and alignment
    py::class_<Bijection>(m, "Bijection")
        .def(py::init<std::vector<VertexId>>(), py::arg("mapping"))
        .def_static("identity", &Bijection::identity, py::arg("n"))
        .def_property_readonly("mapping",
                               [](const Bijection& b) { return b.mapping(); })
        .def("inverse", &Bijection::inverse)
        .def("__len__", &Bijection::size)
        .def("__call__", [](const Bijection& b, VertexId v) { return b(v); })
        .def("__eq__",
             [](const Bijection& a, const Bijection& b) { return a == b; });

    m.def("disagreements", &disagreements, py::arg("g1"), py::arg("g2"),
          py::arg("psi"));
    m.def("mismatch_count", &mismatch_count, py::arg("psi"), py::arg("phi"));

    py::class_<MatchResult>(m, "MatchResult")
        .def_readonly("best", &MatchResult::best)
        .def_readonly("disagreements", &MatchResult::disagreements)
        .def_readonly("optimal", &MatchResult::optimal)
        .def_readonly("minimizers", &MatchResult::minimizers);
    m.def("exact_gmp",
          [](const Graph& g1, const Graph& g2, std::size_t limit,
             bool all_minimizers) {
              return exact_gmp(g1, g2, {limit, all_minimizers});
          },
          py::arg("g1"), py::arg("g2"), py::arg("limit") = 10,
          py::arg("all_minimizers") = false);
    m.def("local_search_gmp", &local_search_gmp, py::arg("g1"), py::arg("g2"),
          py::arg("restarts"), py::arg("seed"));

    m.def("mean_random_disagreements",
          [](const Graph& g1, const Graph& g2) {
              const Rational r = mean_random_disagreements(g1, g2);
              return std::make_pair(r.num, r.den);
          },
          "Exact rational mean of Delta over all bijections, as (num, den)");
    m.def("alignment_strength", &alignment_strength, py::arg("g1"), py::arg("g2"),
          py::arg("psi"));

    py::class_<Heterogeneity>(m, "Heterogeneity")
        .def_readonly("mu", &Heterogeneity::mu)
        .def_readonly("sigma2", &Heterogeneity::sigma2)
        .def_readonly("rho_h", &Heterogeneity::rho_h);
    m.def("heterogeneity", &heterogeneity, py::arg("probs"));
    m.def("total_correlation", &total_correlation, py::arg("rho_e"),
          py::arg("rho_h"));
    m.def("empirical_edge_correlation", &empirical_edge_correlation,
          py::arg("g1"), py::arg("g2"));

    py::class_<Theorem1Row>(m, "Theorem1Row")
        .def_readonly("rho", &Theorem1Row::rho)
        .def_readonly("trials", &Theorem1Row::trials)
        .def_readonly("recovery_fraction", &Theorem1Row::recovery_fraction);
    m.def("theorem1_experiment",
          [](VertexId n, double p, const std::vector<double>& grid,
             std::uint32_t trials, Seed seed, std::size_t limit) {
              return theorem1_experiment(n, p, grid, trials, seed, limit);
          },
          py::arg("n"), py::arg("p"), py::arg("rho_grid"), py::arg("trials"),
          py::arg("seed"), py::arg("limit") = 10);

    py::class_<StrengthTrial>(m, "StrengthTrial")
        .def_readonly("trial", &StrengthTrial::trial)
        .def_readonly("strength", &StrengthTrial::strength)
        .def_readonly("rho_t", &StrengthTrial::rho_t)
        .def_readonly("abs_error", &StrengthTrial::abs_error);
    m.def("strength_convergence_experiment", &strength_convergence_experiment,
          py::arg("probs"), py::arg("rho_e"), py::arg("trials"), py::arg("seed"));

    // ensemble significance
    py::class_<Characteristic>(m, "Characteristic")
        .def(py::init([](const std::string& name,
                         std::function<double(const Graph&)> fn) {
                 return Characteristic{name, std::move(fn)};
             }),
             py::arg("name"), py::arg("evaluate"))
        .def_readonly("name", &Characteristic::name)
        .def("__call__", [](const Characteristic& c, const Graph& g) {
            return c.evaluate(g);
        });
    m.def("make_characteristic", &make_characteristic, py::arg("name"));
    m.def("characteristic_names", &characteristic_names);

    py::class_<EnsembleSummary>(m, "EnsembleSummary")
        .def_readonly("count", &EnsembleSummary::count)
        .def_readonly("values", &EnsembleSummary::values);

    const auto model_from_kwargs = [](const std::string& model, VertexId n,
                                      std::uint64_t m_edges, double p, VertexId k,
                                      double beta, VertexId m0, VertexId mm,
                                      std::uint32_t t) -> ModelParams {
        if (model == "er-gnm") return GnmParams{n, m_edges};
        if (model == "er-gnp") return GnpParams{n, p};
        if (model == "ws") return WsParams{n, k, beta};
        if (model == "ba") return BaParams{m0, mm, t};
        throw std::invalid_argument("unknown model '" + model + "'");
    };
    m.def("build_ensemble",
          [model_from_kwargs](const std::string& model, std::uint32_t count,
                              const Characteristic& eta, Seed seed, VertexId n,
                              std::uint64_t m_edges, double p, VertexId k,
                              double beta, VertexId m0, VertexId mm,
                              std::uint32_t t) {
              return build_ensemble(
                  model_from_kwargs(model, n, m_edges, p, k, beta, m0, mm, t),
                  count, eta, seed);
          },
          py::arg("model"), py::arg("count"), py::arg("eta"), py::arg("seed"),
          py::arg("n") = 0, py::arg("m") = 0, py::arg("p") = 0.0,
          py::arg("k") = 0, py::arg("beta") = 0.0, py::arg("m0") = 0,
          py::arg("m_per_step") = 0, py::arg("t") = 0);
    m.def("tail_probability", &tail_probability, py::arg("summary"), py::arg("t"));

    py::class_<SignificanceReport>(m, "SignificanceReport")
        .def_readonly("observed", &SignificanceReport::observed)
        .def_readonly("p_lower", &SignificanceReport::p_lower)
        .def_readonly("p_upper", &SignificanceReport::p_upper)
        .def_readonly("p_two_sided", &SignificanceReport::p_two_sided);
    m.def("significance", &significance, py::arg("summary"), py::arg("observed"));
}
