#include "graphlab/alignment.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphlab/format.hpp"
#include "graphlab/parallel.hpp"

namespace graphlab {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational mean_random_disagreements(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("mean_random_disagreements: order mismatch");
    const std::int64_t n = g1.vertex_count();
    if (n < 2)
        throw std::invalid_argument("mean_random_disagreements: need n >= 2");
    const std::int64_t pairs = n * (n - 1) / 2;
    const std::int64_t m1 = static_cast<std::int64_t>(g1.edge_count());
    const std::int64_t m2 = static_cast<std::int64_t>(g2.edge_count());
    // Under a uniform random bijection a fixed pair maps to a uniform pair,
    // so E[Delta] = m1 + m2 - 2 m1 m2 / C.
    return Rational((m1 + m2) * pairs - 2 * m1 * m2, pairs);
}

double alignment_strength(const Graph& g1, const Graph& g2,
                          const Bijection& psi) {
    const Rational mean = mean_random_disagreements(g1, g2);
    if (mean.num == 0)
        throw std::domain_error(
            "alignment_strength: degenerate instance (both graphs empty or "
            "both complete)");
    const std::uint64_t delta = disagreements(g1, g2, psi);
    return 1.0 - static_cast<double>(delta) / mean.value();
}

BernoulliMoments bernoulli_moments(const BernoulliMatrix& probs) {
    const VertexId n = probs.order();
    if (n < 2)
        throw std::invalid_argument("bernoulli_moments: need order >= 2");
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    double sum = 0.0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) sum += probs.at(i, j);
    const double mu = sum / pairs;
    double sq = 0.0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            const double d = probs.at(i, j) - mu;
            sq += d * d;
        }
    return {mu, sq / pairs};
}

Heterogeneity heterogeneity(const BernoulliMatrix& probs) {
    const auto [mu, sigma2] = bernoulli_moments(probs);
    if (mu == 0.0 || mu == 1.0)
        throw std::domain_error("heterogeneity: rho_h undefined for mu=" +
                                format_sig6(mu));
    return {mu, sigma2, sigma2 / (mu * (1.0 - mu))};
}

double total_correlation(double rho_e, double rho_h) {
    if (!(rho_e >= 0.0 && rho_e <= 1.0) || !(rho_h >= 0.0 && rho_h <= 1.0))
        throw std::invalid_argument("total_correlation: inputs must lie in [0,1]");
    return 1.0 - (1.0 - rho_e) * (1.0 - rho_h);
}

double empirical_edge_correlation(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("empirical_edge_correlation: order mismatch");
    const VertexId n = g1.vertex_count();
    if (n < 2)
        throw std::invalid_argument("empirical_edge_correlation: need n >= 2");
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    const double m1 = static_cast<double>(g1.edge_count());
    const double m2 = static_cast<double>(g2.edge_count());
    double both = 0.0;
    for (const auto& [u, v] : g1.edges())
        if (g2.has_edge(u, v)) both += 1.0;
    const double var1 = pairs * m1 - m1 * m1;
    const double var2 = pairs * m2 - m2 * m2;
    if (var1 == 0.0 || var2 == 0.0)
        throw std::domain_error(
            "empirical_edge_correlation: an indicator sequence has zero "
            "variance (empty or complete graph)");
    return (pairs * both - m1 * m2) / std::sqrt(var1 * var2);
}

std::vector<Theorem1Row> theorem1_experiment(VertexId n, double p,
                                             std::span<const double> rho_grid,
                                             std::uint32_t trials, Seed seed,
                                             std::size_t exact_limit) {
    if (trials == 0)
        throw std::invalid_argument("theorem1_experiment: trials must be >= 1");
    const Bijection identity = Bijection::identity(n);
    std::vector<std::uint8_t> recovered(rho_grid.size() * trials, 0);
    parallel_for(rho_grid.size() * trials, [&](std::size_t task) {
        const std::size_t r = task / trials;
        const auto [g1, g2] = gen_correlated_pair(
            {n, p, rho_grid[r]}, seed.with_stream(seed.stream + task));
        const MatchResult result =
            exact_gmp(g1, g2, {.limit = exact_limit, .all_minimizers = true});
        for (const Bijection& psi : result.minimizers) {
            if (psi == identity) {
                recovered[task] = 1;
                break;
            }
        }
    });
    std::vector<Theorem1Row> rows(rho_grid.size());
    for (std::size_t r = 0; r < rho_grid.size(); ++r) {
        std::uint32_t hits = 0;
        for (std::uint32_t t = 0; t < trials; ++t) hits += recovered[r * trials + t];
        rows[r] = {rho_grid[r], trials, static_cast<double>(hits) / trials};
    }
    return rows;
}

std::string theorem1_csv(std::span<const Theorem1Row> rows) {
    std::string csv = "rho,trials,recovery_fraction\n";
    for (const auto& row : rows) {
        csv += format_full(row.rho);
        csv += ',';
        csv += std::to_string(row.trials);
        csv += ',';
        csv += format_full(row.recovery_fraction);
        csv += '\n';
    }
    return csv;
}

std::vector<StrengthTrial> strength_convergence_experiment(
    const BernoulliMatrix& probs, double rho_e, std::uint32_t trials,
    Seed seed) {
    if (trials == 0)
        throw std::invalid_argument(
            "strength_convergence_experiment: trials must be >= 1");
    const Heterogeneity het = heterogeneity(probs);
    const double rho_t = total_correlation(rho_e, het.rho_h);
    const Bijection identity = Bijection::identity(probs.order());

    std::vector<StrengthTrial> rows(trials);
    parallel_for(trials, [&](std::size_t t) {
        const auto [g1, g2] =
            gen_bernoulli_matrix(probs, rho_e, seed.with_stream(seed.stream + t));
        const double str = alignment_strength(g1, g2, identity);
        rows[t] = {static_cast<std::uint32_t>(t), str, rho_t,
                   std::abs(str - rho_t)};
    });
    return rows;
}

std::string strength_csv(std::span<const StrengthTrial> rows) {
    std::string csv = "trial,str,rho_T,abs_error\n";
    for (const auto& row : rows) {
        csv += std::to_string(row.trial);
        csv += ',';
        csv += format_full(row.strength);
        csv += ',';
        csv += format_full(row.rho_t);
        csv += ',';
        csv += format_full(row.abs_error);
        csv += '\n';
    }
    return csv;
}

}  // namespace graphlab
