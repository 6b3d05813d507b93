// graphlab: seeded random-graph experiments from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/alignment.hpp"
#include "graphlab/edge_io.hpp"
#include "graphlab/ensemble.hpp"
#include "graphlab/format.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/matching.hpp"
#include "graphlab/statistics.hpp"

namespace gl = graphlab;

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out << content;
}

// Grid forms: "lo:hi:steps" (linear) or "log:lo:hi:steps" (geometric).
std::vector<double> parse_grid(const std::string& text) {
    std::string body = text;
    bool geometric = false;
    if (body.rfind("log:", 0) == 0) {
        geometric = true;
        body = body.substr(4);
    }
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t colon = body.find(':', pos);
        parts.push_back(body.substr(pos, colon == std::string::npos
                                             ? std::string::npos
                                             : colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() != 3)
        throw CLI::ValidationError("grid", "expected lo:hi:steps or log:lo:hi:steps");
    double lo = 0.0, hi = 0.0;
    long steps = 0;
    try {
        lo = std::stod(parts[0]);
        hi = std::stod(parts[1]);
        steps = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("grid", "malformed grid '" + text + "'");
    }
    if (steps < 1) throw CLI::ValidationError("grid", "steps must be >= 1");
    if (geometric && (lo <= 0.0 || hi <= 0.0))
        throw CLI::ValidationError("grid", "log grid needs positive endpoints");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (long i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0
                                    : static_cast<double>(i) /
                                          static_cast<double>(steps - 1);
        grid.push_back(geometric ? lo * std::pow(hi / lo, t)
                                 : lo + (hi - lo) * t);
    }
    return grid;
}

struct ModelFlags {
    std::string model;
    std::uint32_t n = 0;
    std::uint64_t m_edges = 0;
    double p = 0.0;
    std::uint32_t k = 0;
    double beta = 0.0;
    std::uint32_t m0 = 0;
    std::uint32_t m = 0;
    std::uint32_t t = 0;
    double rho = 0.0;

    void attach(CLI::App* cmd, bool with_corr) {
        auto* model_opt =
            cmd->add_option("--model", model, "generator model")->required();
        std::vector<std::string> names{"er-gnm", "er-gnp", "ws", "ba"};
        if (with_corr) names.push_back("corr-pair");
        model_opt->check(CLI::IsMember(names));
        cmd->add_option("--n", n, "vertex count");
        cmd->add_option("--M", m_edges, "edge count (er-gnm)");
        cmd->add_option("--p", p, "edge probability (er-gnp, corr-pair)");
        cmd->add_option("--k", k, "lattice degree (ws)");
        cmd->add_option("--beta", beta, "rewiring probability (ws)");
        cmd->add_option("--m0", m0, "seed vertices (ba)");
        cmd->add_option("--m", m, "edges per new vertex (ba)");
        cmd->add_option("--t", t, "growth steps (ba)");
        cmd->add_option("--rho", rho, "edge correlation (corr-pair)");
    }

    gl::ModelParams single_model() const {
        if (model == "er-gnm") return gl::GnmParams{n, m_edges};
        if (model == "er-gnp") return gl::GnpParams{n, p};
        if (model == "ws") return gl::WsParams{n, k, beta};
        if (model == "ba") return gl::BaParams{m0, m, t};
        throw CLI::ValidationError("--model", "'" + model +
                                                  "' does not name a single-graph model");
    }

    std::string describe() const {
        std::string s = "model=" + model;
        if (model == "er-gnm")
            s += " n=" + std::to_string(n) + " M=" + std::to_string(m_edges);
        else if (model == "er-gnp")
            s += " n=" + std::to_string(n) + " p=" + gl::format_sig6(p);
        else if (model == "ws")
            s += " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " beta=" + gl::format_sig6(beta);
        else if (model == "ba")
            s += " m0=" + std::to_string(m0) + " m=" + std::to_string(m) +
                 " t=" + std::to_string(t);
        else if (model == "corr-pair")
            s += " n=" + std::to_string(n) + " p=" + gl::format_sig6(p) +
                 " rho=" + gl::format_sig6(rho);
        return s;
    }
};

int run_generate(const ModelFlags& flags, gl::Seed seed, const std::string& out,
                 const std::string& out2, const std::string& format) {
    if (flags.model == "corr-pair") {
        if (out2.empty())
            throw CLI::RequiredError("--out2 (second graph of the pair)");
        const auto [g1, g2] =
            gl::gen_correlated_pair({flags.n, flags.p, flags.rho}, seed);
        gl::save_graph(g1, out, format);
        gl::save_graph(g2, out2, format);
        std::cout << "generate: " << flags.describe() << " edges=" << g1.edge_count()
                  << "/" << g2.edge_count() << " -> " << out << ", " << out2
                  << "\n";
        return 0;
    }
    const gl::Graph g = gl::sample_model(flags.single_model(), seed);
    gl::save_graph(g, out, format);
    std::cout << "generate: " << flags.describe() << " edges=" << g.edge_count()
              << " -> " << out << "\n";
    return 0;
}

int run_stats(const std::string& in, const std::string& metrics_csv,
              const std::string& out) {
    const gl::Graph g = gl::load_graph(in);
    std::vector<std::pair<std::string, double>> rows;
    std::size_t pos = 0;
    while (pos <= metrics_csv.size()) {
        const std::size_t comma = metrics_csv.find(',', pos);
        const std::string metric =
            metrics_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
        pos = comma == std::string::npos ? metrics_csv.size() + 1 : comma + 1;
        if (metric.empty()) continue;
        if (metric == "order") {
            rows.emplace_back(metric, g.vertex_count());
        } else if (metric == "size") {
            rows.emplace_back(metric, static_cast<double>(g.edge_count()));
        } else if (metric == "density") {
            const double pairs =
                static_cast<double>(g.vertex_count()) * (g.vertex_count() - 1) / 2.0;
            rows.emplace_back(metric,
                              pairs == 0.0 ? 0.0 : g.edge_count() / pairs);
        } else if (metric == "clustering") {
            rows.emplace_back(metric, gl::clustering_global(g));
        } else if (metric == "path-length") {
            const auto stats = gl::char_path_length(g);
            rows.emplace_back(metric, stats.mean);
            rows.emplace_back("reachable-fraction", stats.reachable_fraction());
        } else if (metric == "max-degree") {
            const auto deg = gl::degree_sequence(g);
            rows.emplace_back(metric,
                              deg.empty() ? 0.0
                                          : *std::max_element(deg.begin(), deg.end()));
        } else if (metric == "triangles") {
            rows.emplace_back(metric, static_cast<double>(
                                          gl::clustering_counts(g).triangle_total()));
        } else {
            throw CLI::ValidationError("--metrics", "unknown metric '" + metric + "'");
        }
    }
    std::string summary = "stats: in=" + in;
    std::string csv = "metric,value\n";
    for (const auto& [name, value] : rows) {
        summary += " " + name + "=" + gl::format_sig6(value);
        csv += name + "," + gl::format_full(value) + "\n";
    }
    if (!out.empty()) write_file(out, csv);
    std::cout << summary << "\n";
    return 0;
}

int run_match(const std::string& g1_path, const std::string& g2_path,
              const std::string& method, std::uint32_t restarts,
              std::size_t limit, gl::Seed seed, const std::string& out) {
    const gl::Graph g1 = gl::load_graph(g1_path);
    const gl::Graph g2 = gl::load_graph(g2_path);
    const gl::MatchResult result =
        method == "exact" ? gl::exact_gmp(g1, g2, {.limit = limit})
                          : gl::local_search_gmp(g1, g2, restarts, seed);

    std::optional<double> strength;
    try {
        strength = gl::alignment_strength(g1, g2, result.best);
    } catch (const std::domain_error&) {
        // degenerate denominator: skip the strength report
    }
    const auto mismatches =
        result.mismatches_vs(gl::Bijection::identity(g1.vertex_count()));

    std::cout << "match: method=" << method
              << " disagreements=" << result.disagreements
              << " optimal=" << (result.optimal ? "true" : "false");
    if (strength) std::cout << " strength=" << gl::format_sig6(*strength);
    if (mismatches) std::cout << " mismatches_vs_identity=" << *mismatches;
    std::cout << "\n";

    if (!out.empty()) {
        nlohmann::json j;
        j["method"] = method;
        j["disagreements"] = result.disagreements;
        j["optimal"] = result.optimal;
        j["mapping"] = result.best.mapping();
        if (strength) j["strength"] = *strength;
        if (mismatches) j["mismatches_vs_identity"] = *mismatches;
        write_file(out, j.dump() + "\n");
    }
    return 0;
}

int run_significance(const std::string& obs_path, const ModelFlags& flags,
                     std::uint32_t ensemble, const std::string& stat,
                     gl::Seed seed, const std::string& out) {
    const gl::Graph observed = gl::load_graph(obs_path);
    const auto summary = gl::build_ensemble(flags.single_model(), ensemble,
                                            gl::make_characteristic(stat), seed);
    const auto report = gl::significance(summary, observed);
    const std::string csv = gl::significance_csv(summary, report);
    if (out.empty()) {
        std::cout << csv;
    } else {
        write_file(out, csv);
        std::cout << "significance: stat=" << stat << " observed="
                  << gl::format_sig6(report.observed)
                  << " p_lower=" << gl::format_sig6(report.p_lower)
                  << " p_upper=" << gl::format_sig6(report.p_upper)
                  << " p_two_sided=" << gl::format_sig6(report.p_two_sided)
                  << " -> " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphlab: random-graph models, matching and significance"};
    app.require_subcommand(1);

    std::uint64_t seed_master = 0;
    std::uint64_t seed_stream = 0;
    app.add_option("--seed", seed_master, "master seed")->capture_default_str();
    app.add_option("--stream", seed_stream, "seed stream index")
        ->capture_default_str();
    auto seed = [&] { return gl::Seed{seed_master, seed_stream}; };

    // generate
    auto* generate = app.add_subcommand("generate", "sample a seeded graph");
    ModelFlags gen_flags;
    gen_flags.attach(generate, true);
    std::string gen_out, gen_out2, gen_format = "edge-list";
    generate->add_option("--out", gen_out, "output path")->required();
    generate->add_option("--out2", gen_out2, "second output path (corr-pair)");
    generate->add_option("--format", gen_format, "edge-list or json")
        ->check(CLI::IsMember({"edge-list", "json"}));

    // stats
    auto* stats = app.add_subcommand("stats", "network statistics of a graph file");
    std::string stats_in, stats_out;
    std::string stats_metrics =
        "order,size,density,clustering,path-length,max-degree";
    stats->add_option("--in", stats_in, "input graph file")->required();
    stats->add_option("--metrics", stats_metrics,
                      "comma list: order,size,density,clustering,path-length,"
                      "max-degree,triangles")
        ->capture_default_str();
    stats->add_option("--out", stats_out, "optional CSV output path");

    // match
    auto* match = app.add_subcommand("match", "graph matching between two files");
    std::string match_g1, match_g2, match_method, match_out;
    std::uint32_t match_restarts = 20;
    std::size_t match_limit = 10;
    match->add_option("--g1", match_g1, "first graph file")->required();
    match->add_option("--g2", match_g2, "second graph file")->required();
    match->add_option("--method", match_method, "exact or local")
        ->required()
        ->check(CLI::IsMember({"exact", "local"}));
    match->add_option("--restarts", match_restarts, "local search restarts")
        ->capture_default_str();
    match->add_option("--limit", match_limit, "exact solver size limit")
        ->capture_default_str();
    match->add_option("--out", match_out, "optional JSON report path");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "batch experiments");
    experiment->require_subcommand(1);

    auto* ws_cmd = experiment->add_subcommand("ws-curves",
                                              "L(beta)/L(0) and C(beta)/C(0)");
    std::uint32_t ws_n = 1000, ws_k = 10, ws_trials = 10;
    std::string ws_grid = "log:0.0001:1:9", ws_out;
    ws_cmd->add_option("--n", ws_n)->capture_default_str();
    ws_cmd->add_option("--k", ws_k)->capture_default_str();
    ws_cmd->add_option("--beta-grid", ws_grid, "lo:hi:steps or log:lo:hi:steps")
        ->capture_default_str();
    ws_cmd->add_option("--trials", ws_trials)->capture_default_str();
    ws_cmd->add_option("--out", ws_out, "CSV output path")->required();

    auto* ba_cmd = experiment->add_subcommand("ba-powerlaw",
                                              "degree histogram and gamma fit");
    std::uint32_t ba_m0 = 5, ba_m = 2, ba_t = 20000, ba_samples = 5, ba_kmin = 0;
    std::string ba_out;
    ba_cmd->add_option("--m0", ba_m0)->capture_default_str();
    ba_cmd->add_option("--m", ba_m)->capture_default_str();
    ba_cmd->add_option("--t", ba_t)->capture_default_str();
    ba_cmd->add_option("--samples", ba_samples)->capture_default_str();
    ba_cmd->add_option("--kmin", ba_kmin, "fit cutoff (default: m)");
    ba_cmd->add_option("--out", ba_out, "CSV output path")->required();

    auto* match_cmd = experiment->add_subcommand(
        "matchability", "exact-GMP recovery fraction per rho");
    std::uint32_t th_n = 8, th_trials = 200;
    double th_p = 0.5;
    std::size_t th_limit = 10;
    std::string th_grid = "0:1:5", th_out;
    match_cmd->add_option("--n", th_n)->capture_default_str();
    match_cmd->add_option("--p", th_p)->capture_default_str();
    match_cmd->add_option("--rho-grid", th_grid)->capture_default_str();
    match_cmd->add_option("--trials", th_trials)->capture_default_str();
    match_cmd->add_option("--limit", th_limit)->capture_default_str();
    match_cmd->add_option("--out", th_out, "CSV output path")->required();

    auto* strength_cmd = experiment->add_subcommand(
        "strength", "alignment strength at the identity vs rho_T");
    std::uint32_t st_n = 800, st_trials = 10;
    double st_p = 0.3, st_rho = 0.6;
    std::optional<double> st_p_across;
    std::string st_out;
    strength_cmd->add_option("--n", st_n)->capture_default_str();
    strength_cmd->add_option("--p", st_p)->capture_default_str();
    strength_cmd->add_option("--p-across", st_p_across,
                             "two-block: across-half probability");
    strength_cmd->add_option("--rho", st_rho, "edge correlation rho_e")
        ->capture_default_str();
    strength_cmd->add_option("--trials", st_trials)->capture_default_str();
    strength_cmd->add_option("--out", st_out, "CSV output path")->required();

    auto* poisson_cmd = experiment->add_subcommand(
        "poisson", "pooled degree histogram vs Poisson((n-1)p)");
    std::uint32_t po_n = 2000, po_samples = 50;
    double po_p = 0.002;
    std::string po_out;
    poisson_cmd->add_option("--n", po_n)->capture_default_str();
    poisson_cmd->add_option("--p", po_p)->capture_default_str();
    poisson_cmd->add_option("--samples", po_samples)->capture_default_str();
    poisson_cmd->add_option("--out", po_out, "CSV output path")->required();

    // significance
    auto* sig = app.add_subcommand(
        "significance", "observed statistic against a null-model ensemble");
    ModelFlags sig_flags;
    std::string sig_obs, sig_stat = "edges", sig_out;
    std::uint32_t sig_ensemble = 999;
    sig->add_option("--obs", sig_obs, "observed graph file")->required();
    sig_flags.attach(sig, false);
    sig->add_option("--ensemble", sig_ensemble, "ensemble size")
        ->capture_default_str();
    sig->add_option("--stat", sig_stat,
                    "edges, clustering, path-length or max-degree")
        ->capture_default_str()
        ->check(CLI::IsMember(gl::characteristic_names()));
    sig->add_option("--out", sig_out, "optional CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*generate)
            return run_generate(gen_flags, seed(), gen_out, gen_out2, gen_format);
        if (*stats) return run_stats(stats_in, stats_metrics, stats_out);
        if (*match)
            return run_match(match_g1, match_g2, match_method, match_restarts,
                             match_limit, seed(), match_out);
        if (*sig)
            return run_significance(sig_obs, sig_flags, sig_ensemble, sig_stat,
                                    seed(), sig_out);
        if (*ws_cmd) {
            const auto grid = parse_grid(ws_grid);
            const auto points = gl::ws_curves(ws_n, ws_k, grid, ws_trials, seed());
            write_file(ws_out, gl::ws_curves_csv(points));
            std::cout << "experiment ws-curves: n=" << ws_n << " k=" << ws_k
                      << " points=" << points.size() << " trials=" << ws_trials
                      << " -> " << ws_out << "\n";
            return 0;
        }
        if (*ba_cmd) {
            gl::DegreeHistogram pooled;
            for (std::uint32_t s = 0; s < ba_samples; ++s) {
                const auto h = gl::degree_histogram(gl::gen_ba(
                    {ba_m0, ba_m, ba_t}, seed().with_stream(seed_stream + s)));
                for (const auto& [degree, count] : h) pooled[degree] += count;
            }
            const auto fit =
                gl::powerlaw_fit(pooled, ba_kmin == 0 ? ba_m : ba_kmin);
            std::string csv = "degree,count\n";
            for (const auto& [degree, count] : pooled)
                csv += std::to_string(degree) + "," + std::to_string(count) + "\n";
            write_file(ba_out, csv);
            std::cout << "experiment ba-powerlaw: m0=" << ba_m0 << " m=" << ba_m
                      << " t=" << ba_t << " samples=" << ba_samples
                      << " gamma=" << gl::format_sig6(fit.gamma)
                      << " r2=" << gl::format_sig6(fit.r2) << " -> " << ba_out
                      << "\n";
            return 0;
        }
        if (*match_cmd) {
            const auto grid = parse_grid(th_grid);
            const auto rows = gl::theorem1_experiment(th_n, th_p, grid, th_trials,
                                                      seed(), th_limit);
            write_file(th_out, gl::theorem1_csv(rows));
            std::cout << "experiment matchability: n=" << th_n
                      << " p=" << gl::format_sig6(th_p) << " rows=" << rows.size()
                      << " trials=" << th_trials << " -> " << th_out << "\n";
            return 0;
        }
        if (*strength_cmd) {
            const auto probs =
                st_p_across ? gl::BernoulliMatrix::two_block(st_n, st_p, *st_p_across)
                            : gl::BernoulliMatrix::constant(st_n, st_p);
            const auto rows =
                gl::strength_convergence_experiment(probs, st_rho, st_trials, seed());
            write_file(st_out, gl::strength_csv(rows));
            double worst = 0.0;
            for (const auto& row : rows) worst = std::max(worst, row.abs_error);
            std::cout << "experiment strength: n=" << st_n
                      << " rho_T=" << gl::format_sig6(rows[0].rho_t)
                      << " max_abs_error=" << gl::format_sig6(worst) << " -> "
                      << st_out << "\n";
            return 0;
        }
        if (*poisson_cmd) {
            gl::DegreeHistogram pooled;
            std::uint64_t total = 0;
            for (std::uint32_t s = 0; s < po_samples; ++s) {
                const auto h = gl::degree_histogram(gl::gen_gnp(
                    {po_n, po_p}, seed().with_stream(seed_stream + s)));
                for (const auto& [degree, count] : h) {
                    pooled[degree] += count;
                    total += count;
                }
            }
            const double lambda = (po_n - 1) * po_p;
            const double tv = gl::poisson_tv_distance(pooled, lambda);
            std::string csv = "degree,count,empirical,poisson\n";
            double pmf = std::exp(-lambda);
            const gl::VertexId max_degree = pooled.rbegin()->first;
            for (gl::VertexId degree = 0; degree <= max_degree; ++degree) {
                if (degree > 0) pmf *= lambda / degree;
                const auto it = pooled.find(degree);
                const std::uint64_t count = it == pooled.end() ? 0 : it->second;
                csv += std::to_string(degree) + "," + std::to_string(count) + "," +
                       gl::format_full(static_cast<double>(count) /
                                       static_cast<double>(total)) +
                       "," + gl::format_full(pmf) + "\n";
            }
            write_file(po_out, csv);
            std::cout << "experiment poisson: n=" << po_n
                      << " p=" << gl::format_sig6(po_p)
                      << " lambda=" << gl::format_sig6(lambda)
                      << " tv_distance=" << gl::format_sig6(tv) << " -> " << po_out
                      << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "graphlab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "graphlab: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
