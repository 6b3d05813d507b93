#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphlab/alignment.hpp"
#include "graphlab/generators.hpp"
#include "test_support.hpp"

using namespace graphlab;
using namespace graphlab::test;

namespace {

// Exact mean of Delta over every bijection, summed in integers.
Rational brute_force_mean_disagreements(const Graph& g1, const Graph& g2) {
    std::vector<VertexId> perm(g1.vertex_count());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::int64_t sum = 0;
    std::int64_t count = 0;
    do {
        sum += static_cast<std::int64_t>(disagreements(g1, g2, Bijection(perm)));
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(sum, count);
}

Graph complement(const Graph& g) {
    std::vector<EdgePair> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph relabel(const Graph& g, const Bijection& psi) {
    std::vector<EdgePair> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(psi(u), psi(v));
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("alignment");

TEST_CASE("rational normalization") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 5) == Rational(0, 9));
    CHECK(Rational(3, 2).value() == 1.5);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("mean random disagreements: closed-form fixed points") {
    const Graph empty4 = Graph::from_edge_list(4, {});
    CHECK(mean_random_disagreements(empty4, empty4) == Rational(0, 1));

    const Graph k4 = complete_graph(4);
    CHECK(mean_random_disagreements(k4, k4) == Rational(0, 1));

    // n=4, |E1|=3, |E2|=2 -> 3 + 2 - 2*6/6 = 3, also by full enumeration.
    const Graph g1(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph g2(4, {{0, 2}, {1, 3}});
    CHECK(mean_random_disagreements(g1, g2) == Rational(3, 1));
    CHECK(brute_force_mean_disagreements(g1, g2) == Rational(3, 1));
}

TEST_CASE("closed form equals brute-force enumeration for small n") {
    for (VertexId n = 2; n <= 6; ++n) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Graph g1 = gen_gnp({n, 0.45}, {n * 1000ull, 2 * s});
            const Graph g2 = gen_gnp({n, 0.55}, {n * 1000ull, 2 * s + 1});
            CHECK(mean_random_disagreements(g1, g2) ==
                  brute_force_mean_disagreements(g1, g2));
        }
    }
}

TEST_CASE("alignment strength endpoints") {
    const Graph g = gen_gnp({20, 0.4}, {71, 0});
    CHECK(alignment_strength(g, g, Bijection::identity(20)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const Graph empty = Graph::from_edge_list(5, {});
    CHECK_THROWS_AS(alignment_strength(empty, empty, Bijection::identity(5)),
                    std::domain_error);
    const Graph k5 = complete_graph(5);
    CHECK_THROWS_AS(alignment_strength(k5, k5, Bijection::identity(5)),
                    std::domain_error);
}

TEST_CASE("independent graphs have mean strength near zero") {
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Graph g1 = gen_gnp({300, 0.3}, {9300, 2 * s});
        const Graph g2 = gen_gnp({300, 0.3}, {9300, 2 * s + 1});
        sum += alignment_strength(g1, g2, Bijection::identity(300));
    }
    CHECK(std::abs(sum / 50.0) < 0.05);
}

TEST_CASE("heterogeneity on fixed matrices") {
    const auto constant = heterogeneity(BernoulliMatrix::constant(6, 0.3));
    CHECK(constant.mu == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(constant.sigma2 == doctest::Approx(0.0));
    CHECK(constant.rho_h == doctest::Approx(0.0));

    // Half the pairs at 0, half at 1: mu = 1/2, sigma2 = 1/4, rho_h = 1.
    BernoulliMatrix split(4);
    split.set(0, 1, 1.0);
    split.set(0, 2, 1.0);
    split.set(0, 3, 1.0);
    const auto h = heterogeneity(split);
    CHECK(h.mu == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.sigma2 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(h.rho_h == doctest::Approx(1.0).epsilon(1e-12));

    // Two-block 0.2/0.6 on n=4: entries {0.2,0.2,0.6,0.6,0.6,0.6}.
    const auto blocks = heterogeneity(BernoulliMatrix::two_block(4, 0.2, 0.6));
    CHECK(blocks.mu == doctest::Approx(2.8 / 6.0).epsilon(1e-12));
    CHECK(blocks.sigma2 == doctest::Approx(0.2133333333333333 / 6.0).epsilon(1e-9));
    CHECK(blocks.rho_h == doctest::Approx(1.0 / 7.0).epsilon(1e-9));
}

TEST_CASE("heterogeneity rejects degenerate means") {
    CHECK_THROWS_AS(heterogeneity(BernoulliMatrix(5)), std::domain_error);
    CHECK_THROWS_AS(heterogeneity(BernoulliMatrix::constant(5, 1.0)),
                    std::domain_error);
    // moments stay available even when rho_h is undefined
    CHECK(bernoulli_moments(BernoulliMatrix(5)).mu == 0.0);
}

TEST_CASE("total correlation") {
    CHECK(total_correlation(0.0, 0.3) == doctest::Approx(0.3));
    CHECK(total_correlation(1.0, 0.3) == doctest::Approx(1.0));
    CHECK(total_correlation(0.5, 0.5) == doctest::Approx(0.75));
    CHECK_THROWS_AS(total_correlation(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(total_correlation(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("empirical edge correlation endpoints") {
    const Graph g = gen_gnp({20, 0.4}, {81, 0});
    CHECK(empirical_edge_correlation(g, g) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(empirical_edge_correlation(g, complement(g)) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    const Graph empty = Graph::from_edge_list(20, {});
    CHECK_THROWS_AS(empirical_edge_correlation(g, empty), std::domain_error);
}

TEST_CASE("empirical edge correlation tracks the construction parameter") {
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto [g1, g2] = gen_correlated_pair({300, 0.3, 0.6}, {8300, s});
        sum += empirical_edge_correlation(g1, g2);
    }
    const double mean = sum / 50.0;
    CHECK(mean > 0.55);
    CHECK(mean < 0.65);
}

TEST_CASE("empirical edge correlation is relabeling-invariant") {
    Rng rng({92, 0});
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto [g1, g2] = gen_correlated_pair({30, 0.4, 0.5}, {9200, s});
        const double before = empirical_edge_correlation(g1, g2);
        const Bijection psi = Bijection::random(30, rng);
        const double after =
            empirical_edge_correlation(relabel(g1, psi), relabel(g2, psi));
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("theorem1 experiment: monotone endpoints at desk scale") {
    const double grid[] = {0.0, 1.0};
    const auto rows = theorem1_experiment(6, 0.5, grid, 30, {777, 0});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rho == 0.0);
    CHECK(rows[1].rho == 1.0);
    CHECK(rows[1].recovery_fraction == 1.0);  // identical graphs
    CHECK(rows[1].recovery_fraction >= rows[0].recovery_fraction);
    CHECK(rows[0].trials == 30);

    const std::string csv = theorem1_csv(rows);
    CHECK(csv.rfind("rho,trials,recovery_fraction\n", 0) == 0);
}

TEST_CASE("strength experiment: rho_e = 1 gives strength 1 exactly") {
    const auto rows = strength_convergence_experiment(
        BernoulliMatrix::constant(40, 0.3), 1.0, 5, {555, 0});
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row.strength == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row.rho_t == doctest::Approx(1.0).epsilon(1e-12));
    }
    const std::string csv = strength_csv(rows);
    CHECK(csv.rfind("trial,str,rho_T,abs_error\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_SUITE_END();
