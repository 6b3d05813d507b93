#include <doctest.h>

#include <cmath>

#include "graphlab/edge_io.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/statistics.hpp"
#include "test_support.hpp"

using namespace graphlab;
using namespace graphlab::test;

TEST_SUITE_BEGIN("statistics");

TEST_CASE("clustering counts on fixed shapes") {
    const auto k3 = clustering_counts(complete_graph(3));
    CHECK(k3.triangles == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(k3.triples == std::vector<std::uint64_t>{1, 1, 1});

    const auto star = clustering_counts(star_graph(3));
    CHECK(star.triangles[0] == 0);
    CHECK(star.triples[0] == 3);
}

TEST_CASE("karate triangle total matches triple enumeration") {
    const Graph karate = load_edge_list(data_file("karate.edges"));
    const auto counts = clustering_counts(karate);
    CHECK(counts.triangle_total() == enumerate_triangles(karate));
}

TEST_CASE("triangle identity holds on random graphs up to n=50") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = gen_gnp({50, 0.15}, {404, s});
        const auto counts = clustering_counts(g);
        std::uint64_t lambda_sum = 0;
        const auto deg = degree_sequence(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            lambda_sum += counts.triangles[v];
            CHECK(counts.triangles[v] <= counts.triples[v]);
            CHECK(counts.triples[v] ==
                  std::uint64_t{deg[v]} * (deg[v] - 1) / 2);
        }
        CHECK(lambda_sum == 3 * enumerate_triangles(g));
    }
}

TEST_CASE("local clustering ratios") {
    CHECK(clustering_local(complete_graph(3), 1) == 1.0);
    CHECK(clustering_local(star_graph(3), 0) == 0.0);
    CHECK(clustering_local(path_graph(3), 1) == 0.0);  // open triple
    CHECK(clustering_local(path_graph(3), 0) == 0.0);  // tau = 0
    CHECK_THROWS_AS(clustering_local(path_graph(3), 9), std::out_of_range);
}

TEST_CASE("global clustering endpoints") {
    CHECK(clustering_global(complete_graph(5)) == 1.0);
    CHECK(clustering_global(complete_graph(3)) == 1.0);
    CHECK(clustering_global(star_graph(5)) == 0.0);   // a tree
    CHECK(clustering_global(path_graph(6)) == 0.0);
    CHECK(clustering_global(Graph::from_edge_list(4, {})) == 0.0);
}

TEST_CASE("characteristic path length on fixed shapes") {
    CHECK(char_path_length(complete_graph(5)).mean == 1.0);
    for (VertexId n = 2; n <= 6; ++n)
        CHECK(char_path_length(complete_graph(n)).mean == 1.0);

    // path 0-1-2-3: distances 1,2,3,1,2,1 over 6 pairs
    const auto p4 = char_path_length(path_graph(4));
    CHECK(p4.mean == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(p4.reachable_pairs == 6);

    const Graph two_k2(4, {{0, 1}, {2, 3}});
    const auto split = char_path_length(two_k2);
    CHECK(split.mean == 1.0);
    CHECK(split.reachable_pairs == 2);
    CHECK(split.pair_count == 6);
    CHECK(split.reachable_fraction() == doctest::Approx(2.0 / 6.0));

    CHECK_THROWS_AS(char_path_length(Graph::from_edge_list(5, {})),
                    std::domain_error);
}

TEST_CASE("adding an edge never increases a distance") {
    std::uint32_t checked = 0;
    for (std::uint64_t s = 0; checked < 100; ++s) {
        const Graph g = gen_gnp({12, 0.25}, {9090, s});
        // first absent pair after a seeded offset
        Rng rng({9091, s});
        EdgePair missing{0, 0};
        bool found = false;
        for (std::uint64_t attempt = 0; attempt < 100 && !found; ++attempt) {
            const auto u = static_cast<VertexId>(rng.below(12));
            const auto v = static_cast<VertexId>(rng.below(12));
            if (u != v && !g.has_edge(u, v)) {
                missing = {std::min(u, v), std::max(u, v)};
                found = true;
            }
        }
        if (!found) continue;
        auto edges = g.edges();
        edges.push_back(missing);
        const Graph augmented(12, std::move(edges));
        const auto before = fw_distances(g);
        const auto after = fw_distances(augmented);
        for (VertexId i = 0; i < 12; ++i)
            for (VertexId j = 0; j < 12; ++j)
                if (before[i][j] >= 0) {
                    CHECK(after[i][j] >= 0);
                    CHECK(after[i][j] <= before[i][j]);
                }
        ++checked;
    }
}

TEST_CASE("degree histogram") {
    CHECK(degree_histogram(complete_graph(4)) == DegreeHistogram{{3, 4}});
    CHECK(degree_histogram(Graph::from_edge_list(3, {})) ==
          DegreeHistogram{{0, 3}});
    CHECK(degree_histogram(star_graph(4)) == DegreeHistogram{{1, 4}, {4, 1}});
}

TEST_CASE("poisson TV distance on closed-form cases") {
    // Histogram proportional to Poisson(4), huge counts: distance ~ 0.
    DegreeHistogram h;
    double pmf = std::exp(-4.0);
    for (VertexId k = 0; k <= 60; ++k) {
        if (k > 0) pmf *= 4.0 / k;
        const auto count = static_cast<std::uint64_t>(std::llround(pmf * 1e15));
        if (count > 0) h[k] = count;
    }
    CHECK(poisson_tv_distance(h, 4.0) < 1e-9);

    // Point mass at zero vs Poisson(5): TV = 1 - exp(-5).
    const DegreeHistogram point{{0, 1000}};
    CHECK(poisson_tv_distance(point, 5.0) ==
          doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-12));

    CHECK_THROWS_AS(poisson_tv_distance(point, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(poisson_tv_distance(DegreeHistogram{}, 2.0),
                    std::invalid_argument);
}

TEST_CASE("power-law fit recovers synthetic exponents") {
    DegreeHistogram h3, h23, flat;
    for (VertexId k = 2; k <= 100; ++k) {
        h3[k] = static_cast<std::uint64_t>(std::llround(1e12 * std::pow(k, -3.0)));
        h23[k] = static_cast<std::uint64_t>(std::llround(1e12 * std::pow(k, -2.3)));
        flat[k] = 1000;
    }
    const auto fit3 = powerlaw_fit(h3, 2);
    CHECK(fit3.gamma == doctest::Approx(3.0).epsilon(0.01 / 3.0));
    CHECK(fit3.r2 > 0.999);
    CHECK(powerlaw_fit(h23, 2).gamma == doctest::Approx(2.3).epsilon(0.05 / 2.3));
    CHECK(std::abs(powerlaw_fit(flat, 2).gamma) < 0.05);
}

TEST_CASE("power-law fit needs enough support") {
    CHECK_THROWS_AS(powerlaw_fit(DegreeHistogram{{2, 5}, {3, 5}}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(powerlaw_fit(DegreeHistogram{{1, 5}, {2, 5}, {3, 5}}, 4),
                    std::invalid_argument);
}

TEST_CASE("ws curves: identity point at beta=0") {
    const double grid[] = {0.0};
    const auto points = ws_curves(40, 4, grid, 3, {12, 0});
    CHECK(points.size() == 1);
    CHECK(points[0].l_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(points[0].c_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(points[0].trials == 3);
}

TEST_CASE("ws curves: beta=1 endpoint behaves like a random graph") {
    const double grid[] = {1.0};
    const auto points = ws_curves(1000, 10, grid, 3, {888, 0});
    // C(1) ~ k/n makes the ratio tiny against C(0) = 2/3.
    CHECK(points[0].c_ratio < 0.1);
    // L(1) within 30% of ln(n)/ln(k), against the lattice L(0) ~ n/2k.
    const Graph lattice = gen_ws({1000, 10, 0.0}, {888, 0});
    const double l0 = char_path_length(lattice).mean;
    const double l1 = points[0].l_ratio * l0;
    const double predicted = std::log(1000.0) / std::log(10.0);
    CHECK(std::abs(l1 - predicted) / predicted < 0.30);
}

TEST_CASE("ws lattice L(0) sits near n/2k") {
    const Graph lattice = gen_ws({1000, 10, 0.0}, {0, 0});
    const double l0 = char_path_length(lattice).mean;
    CHECK(std::abs(l0 - 50.0) / 50.0 < 0.10);
}

TEST_CASE("ws curves CSV header") {
    const double grid[] = {0.0, 1.0};
    const auto points = ws_curves(20, 4, grid, 1, {5, 0});
    const std::string csv = ws_curves_csv(points);
    CHECK(csv.rfind("beta,L_ratio,C_ratio,trials\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_SUITE_END();
