#include <doctest.h>

#include <cmath>

#include "graphlab/ensemble.hpp"
#include "test_support.hpp"

using namespace graphlab;
using namespace graphlab::test;

TEST_SUITE_BEGIN("ensemble");

TEST_CASE("built-in characteristics") {
    const Graph k4 = complete_graph(4);
    CHECK(make_characteristic("edges").evaluate(k4) == 6.0);
    CHECK(make_characteristic("clustering").evaluate(k4) == 1.0);
    CHECK(make_characteristic("path-length").evaluate(k4) == 1.0);
    CHECK(make_characteristic("max-degree").evaluate(star_graph(5)) == 5.0);
    CHECK_THROWS_AS(make_characteristic("entropy"), std::invalid_argument);
}

TEST_CASE("ensemble of a forced statistic is constant") {
    const auto summary = build_ensemble(GnmParams{30, 10}, 25,
                                        make_characteristic("edges"), {3, 0});
    CHECK(summary.count == 25);
    CHECK(summary.values.size() == 25);
    for (double v : summary.values) CHECK(v == 10.0);
}

TEST_CASE("single-sample ensemble") {
    const auto summary =
        build_ensemble(GnpParams{10, 0.5}, 1, make_characteristic("edges"), {4, 0});
    CHECK(summary.values.size() == 1);
}

TEST_CASE("ensemble mean follows the binomial oracle") {
    const auto summary = build_ensemble(GnpParams{100, 0.1}, 1000,
                                        make_characteristic("edges"), {5, 0});
    const double pairs = 100.0 * 99.0 / 2.0;
    double sum = 0.0;
    for (double v : summary.values) sum += v;
    const double se = std::sqrt(pairs * 0.1 * 0.9 / 1000.0);
    CHECK(std::abs(sum / 1000.0 - 0.1 * pairs) < 3.0 * se);
}

TEST_CASE("rebuilding with the same master seed reproduces values") {
    const auto a = build_ensemble(GnpParams{40, 0.2}, 50,
                                  make_characteristic("clustering"), {66, 0});
    const auto b = build_ensemble(GnpParams{40, 0.2}, 50,
                                  make_characteristic("clustering"), {66, 0});
    CHECK(a.values == b.values);
}

TEST_CASE("tail probability is the empirical CDF") {
    EnsembleSummary summary{GnpParams{4, 0.5}, 4, {1.0, 2.0, 3.0, 4.0},
                            make_characteristic("edges")};
    CHECK(tail_probability(summary, 2.5) == 0.5);
    CHECK(tail_probability(summary, 4.0) == 1.0);
    CHECK(tail_probability(summary, 99.0) == 1.0);
    CHECK(tail_probability(summary, 0.5) == 0.0);
    // monotone, right-continuous at sample points
    CHECK(tail_probability(summary, 2.0) == 0.5);
    double prev = 0.0;
    for (double t = 0.0; t < 5.0; t += 0.25) {
        const double cur = tail_probability(summary, t);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("significance p-values on extreme and attained observations") {
    // ensemble of empty graphs (edges = 0) vs observed K4 (edges = 6)
    const auto summary = build_ensemble(GnmParams{4, 0}, 99,
                                        make_characteristic("edges"), {7, 0});
    const auto high = significance(summary, complete_graph(4));
    CHECK(high.observed == 6.0);
    CHECK(high.p_upper == doctest::Approx(1.0 / 100.0));
    CHECK(high.p_lower == doctest::Approx(1.0));

    // observed graph drawn from the ensemble itself: value is attained
    const auto attained = significance(summary, Graph::from_edge_list(4, {}));
    CHECK(attained.p_two_sided > 2.0 / 100.0);

    // both tails count the attained value
    CHECK(attained.p_lower + attained.p_upper >=
          doctest::Approx(1.0 + 1.0 / 100.0));
    CHECK(high.p_lower + high.p_upper >= doctest::Approx(1.0 + 1.0 / 100.0));
}

TEST_CASE("significance CSV row") {
    const auto summary = build_ensemble(GnmParams{4, 2}, 9,
                                        make_characteristic("edges"), {8, 0});
    const auto report = significance(summary, complete_graph(4));
    const std::string csv = significance_csv(summary, report);
    CHECK(csv.rfind("statistic,observed,ensemble_count,p_lower,p_upper,"
                    "p_two_sided\n", 0) == 0);
    CHECK(csv.find("edges,6,9,1,0.1,0.2") != std::string::npos);
}

TEST_SUITE_END();
