#ifndef GRAPHLAB_MATCHING_HPP
#define GRAPHLAB_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "graphlab/graph.hpp"
#include "graphlab/rng.hpp"

namespace graphlab {

// A permutation of [0, n); entry v is the image of vertex v.
class Bijection {
public:
    explicit Bijection(std::vector<VertexId> mapping);
    static Bijection identity(std::size_t n);
    static Bijection random(std::size_t n, Rng& rng);  // Fisher-Yates

    VertexId operator()(VertexId v) const { return mapping_[v]; }
    std::size_t size() const noexcept { return mapping_.size(); }
    const std::vector<VertexId>& mapping() const noexcept { return mapping_; }
    Bijection inverse() const;

    bool operator==(const Bijection& other) const = default;

private:
    std::vector<VertexId> mapping_;
};

// Number of unordered pairs {v, v'} whose edge indicator in g1 differs from
// the indicator of {psi(v), psi(v')} in g2.
std::uint64_t disagreements(const Graph& g1, const Graph& g2,
                            const Bijection& psi);

// Number of positions where the two bijections differ.
std::uint64_t mismatch_count(const Bijection& psi, const Bijection& phi);

struct MatchResult {
    Bijection best;
    std::uint64_t disagreements = 0;
    bool optimal = false;
    // Full minimizer set, filled only in all-minimizers mode.
    std::vector<Bijection> minimizers;

    std::optional<std::uint64_t> mismatches_vs(const Bijection& phi) const;
};

struct ExactGmpOptions {
    std::size_t limit = 10;       // refuse instances with n above this
    bool all_minimizers = false;  // collect the complete argmin set
};

// Exhaustive branch-and-bound over all n! bijections.  The single-best mode
// returns the lexicographically smallest minimizer; all-minimizers mode
// returns the full set.
MatchResult exact_gmp(const Graph& g1, const Graph& g2,
                      const ExactGmpOptions& options = {});

// Multi-restart best-improvement 2-swap local search from degree-profile
// seeded starts (randomized tie-breaks per restart); the result is
// transposition-locally optimal but not certified optimal.
MatchResult local_search_gmp(const Graph& g1, const Graph& g2,
                             std::uint32_t restarts, Seed seed);

}  // namespace graphlab

#endif
