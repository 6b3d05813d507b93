#ifndef GRAPHLAB_ALIGNMENT_HPP
#define GRAPHLAB_ALIGNMENT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphlab/generators.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/matching.hpp"
#include "graphlab/rng.hpp"

namespace graphlab {

// Exact rational, normalized with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / den; }
    bool operator==(const Rational&) const = default;
};

// Mean of Delta(psi) over all n! bijections, in closed form:
// |E1| + |E2| - 2 |E1| |E2| / (n choose 2).
Rational mean_random_disagreements(const Graph& g1, const Graph& g2);

// 1 - Delta(psi) / mean_random_disagreements; errors when the mean is zero
// (both graphs empty or both complete).
double alignment_strength(const Graph& g1, const Graph& g2,
                          const Bijection& psi);

// Mean and population variance of the (n choose 2) upper-triangle entries.
struct BernoulliMoments {
    double mu = 0.0;
    double sigma2 = 0.0;
};

BernoulliMoments bernoulli_moments(const BernoulliMatrix& probs);

struct Heterogeneity {
    double mu = 0.0;
    double sigma2 = 0.0;
    double rho_h = 0.0;  // sigma2 / (mu * (1 - mu))
};

// Errors when mu is 0 or 1 (rho_h undefined).
Heterogeneity heterogeneity(const BernoulliMatrix& probs);

// rho_T with 1 - rho_T = (1 - rho_e)(1 - rho_h); inputs must lie in [0,1].
double total_correlation(double rho_e, double rho_h);

// Pearson correlation of the paired edge indicators across the (n choose 2)
// vertex pairs; errors when either indicator sequence has zero variance.
double empirical_edge_correlation(const Graph& g1, const Graph& g2);

struct Theorem1Row {
    double rho = 0.0;
    std::uint32_t trials = 0;
    double recovery_fraction = 0.0;
};

// For each rho: the fraction of trials in which the latent alignment (the
// identity, by the shared-vertex-set construction) lies in the exact
// solver's full minimizer set.  Trial t of grid point r uses stream
// r * trials + t.
std::vector<Theorem1Row> theorem1_experiment(VertexId n, double p,
                                             std::span<const double> rho_grid,
                                             std::uint32_t trials, Seed seed,
                                             std::size_t exact_limit = 10);

std::string theorem1_csv(std::span<const Theorem1Row> rows);

struct StrengthTrial {
    std::uint32_t trial = 0;
    double strength = 0.0;
    double rho_t = 0.0;
    double abs_error = 0.0;
};

// Per-trial alignment strength at the identity for pairs drawn from probs
// with edge correlation rho_e, against rho_T from the closed-form
// heterogeneity.  rho_e is the construction parameter, not re-estimated.
std::vector<StrengthTrial> strength_convergence_experiment(
    const BernoulliMatrix& probs, double rho_e, std::uint32_t trials, Seed seed);

std::string strength_csv(std::span<const StrengthTrial> rows);

}  // namespace graphlab

#endif
