#include "graphlab/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "graphlab/format.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/parallel.hpp"

namespace graphlab {

std::uint64_t ClusteringCounts::triangle_total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t t : triangles) sum += t;
    return sum / 3;
}

ClusteringCounts clustering_counts(const Graph& g) {
    const VertexId n = g.vertex_count();
    ClusteringCounts counts;
    counts.triangles.assign(n, 0);
    counts.triples.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        const std::uint64_t d = nb.size();
        counts.triples[v] = d * (d - 1) / 2;
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (g.has_edge(nb[a], nb[b])) ++counts.triangles[v];
    }
    return counts;
}

double clustering_local(const Graph& g, VertexId v) {
    if (v >= g.vertex_count())
        throw std::out_of_range("clustering_local: vertex out of range");
    const auto nb = g.neighbors(v);
    const std::uint64_t d = nb.size();
    const std::uint64_t tau = d * (d - 1) / 2;
    if (tau == 0) return 0.0;
    std::uint64_t lambda = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (g.has_edge(nb[a], nb[b])) ++lambda;
    return static_cast<double>(lambda) / static_cast<double>(tau);
}

double clustering_global(const Graph& g) {
    const auto counts = clustering_counts(g);
    std::uint64_t lambda = 0, tau = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        lambda += counts.triangles[v];
        tau += counts.triples[v];
    }
    return tau == 0 ? 0.0 : static_cast<double>(lambda) / static_cast<double>(tau);
}

PathLengthStats char_path_length(const Graph& g) {
    const VertexId n = g.vertex_count();
    PathLengthStats stats;
    stats.pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    std::uint64_t distance_sum = 0;
    std::vector<std::int32_t> dist(n);
    std::vector<VertexId> queue(n);
    for (VertexId src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            const VertexId u = queue[head++];
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        for (VertexId v = src + 1; v < n; ++v) {
            if (dist[v] > 0) {
                distance_sum += static_cast<std::uint64_t>(dist[v]);
                ++stats.reachable_pairs;
            }
        }
    }
    if (stats.reachable_pairs == 0)
        throw std::domain_error("char_path_length: no mutually reachable pairs");
    stats.mean = static_cast<double>(distance_sum) /
                 static_cast<double>(stats.reachable_pairs);
    return stats;
}

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram h;
    for (VertexId d : degree_sequence(g)) ++h[d];
    return h;
}

double poisson_tv_distance(const DegreeHistogram& hist, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("poisson_tv_distance: lambda must be > 0");
    if (hist.empty())
        throw std::invalid_argument("poisson_tv_distance: empty histogram");

    std::uint64_t total = 0;
    for (const auto& [_, count] : hist) total += count;
    const VertexId max_degree = hist.rbegin()->first;

    double distance = 0.0;
    double pmf = std::exp(-lambda);  // Poisson mass at k, advanced by recurrence
    double poisson_mass = 0.0;
    for (VertexId k = 0; k <= max_degree; ++k) {
        if (k > 0) pmf *= lambda / k;
        poisson_mass += pmf;
        const auto it = hist.find(k);
        const double empirical =
            it == hist.end() ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(total);
        distance += std::abs(empirical - pmf);
    }
    distance += std::max(0.0, 1.0 - poisson_mass);  // Poisson tail beyond max degree
    return distance / 2.0;
}

PowerLawFit powerlaw_fit(const DegreeHistogram& hist, VertexId k_min) {
    if (k_min < 1)
        throw std::invalid_argument("powerlaw_fit: k_min must be >= 1");
    std::uint64_t support = 0;
    VertexId k_max = 0;
    double total = 0.0;
    for (const auto& [k, count] : hist) {
        total += static_cast<double>(count);
        if (k >= k_min && count > 0) {
            ++support;
            k_max = std::max(k_max, k);
        }
    }
    if (support < 3)
        throw std::invalid_argument(
            "powerlaw_fit: need at least 3 distinct degrees >= k_min with "
            "nonzero counts");

    std::vector<double> xs, ys;
    for (std::uint64_t lo = k_min; lo <= k_max; lo *= 2) {
        const std::uint64_t hi = lo * 2;  // exclusive
        const bool truncated = hi > static_cast<std::uint64_t>(k_max) + 1;
        if (truncated && xs.size() >= 2) break;
        const std::uint64_t cover_end = std::min<std::uint64_t>(hi, k_max + 1);
        double mass = 0.0;
        double log_k_sum = 0.0;
        for (std::uint64_t k = lo; k < cover_end; ++k) {
            const auto it = hist.find(static_cast<VertexId>(k));
            if (it != hist.end()) mass += static_cast<double>(it->second);
            log_k_sum += std::log(static_cast<double>(k));
        }
        const std::uint64_t width = cover_end - lo;
        if (mass > 0.0 && width > 0) {
            xs.push_back(log_k_sum / static_cast<double>(width));
            ys.push_back(std::log(mass / total / static_cast<double>(width)));
        }
    }
    if (xs.size() < 2)
        throw std::invalid_argument("powerlaw_fit: too few populated bins");

    const std::size_t m = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = sxy / sxx;

    PowerLawFit fit;
    fit.gamma = -slope;
    fit.k_min = k_min;
    fit.bins = m;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double resid = ys[i] - (my + slope * (xs[i] - mx));
        ss_res += resid * resid;
    }
    fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

std::vector<WsCurvePoint> ws_curves(VertexId n, VertexId k,
                                    std::span<const double> beta_grid,
                                    std::uint32_t trials, Seed seed) {
    if (trials == 0) throw std::invalid_argument("ws_curves: trials must be >= 1");
    const Graph lattice = gen_ws({n, k, 0.0}, seed);
    const double l0 = char_path_length(lattice).mean;
    const double c0 = clustering_global(lattice);

    std::vector<WsCurvePoint> points(beta_grid.size());
    std::vector<double> l_sums(beta_grid.size() * trials);
    std::vector<double> c_sums(beta_grid.size() * trials);
    parallel_for(beta_grid.size() * trials, [&](std::size_t task) {
        const std::size_t b = task / trials;
        const Graph sample = gen_ws({n, k, beta_grid[b]},
                                    seed.with_stream(seed.stream + task));
        l_sums[task] = char_path_length(sample).mean;
        c_sums[task] = clustering_global(sample);
    });
    for (std::size_t b = 0; b < beta_grid.size(); ++b) {
        double l = 0.0, c = 0.0;
        for (std::uint32_t i = 0; i < trials; ++i) {
            l += l_sums[b * trials + i];
            c += c_sums[b * trials + i];
        }
        points[b] = {beta_grid[b], l / trials / l0, c / trials / c0, trials};
    }
    return points;
}

std::string ws_curves_csv(std::span<const WsCurvePoint> points) {
    std::string csv = "beta,L_ratio,C_ratio,trials\n";
    for (const auto& p : points) {
        csv += format_full(p.beta);
        csv += ',';
        csv += format_full(p.l_ratio);
        csv += ',';
        csv += format_full(p.c_ratio);
        csv += ',';
        csv += std::to_string(p.trials);
        csv += '\n';
    }
    return csv;
}

}  // namespace graphlab
