#include "distcent/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "distcent/centrality.hpp"
#include "distcent/csv.hpp"
#include "distcent/edge_list.hpp"
#include "distcent/error.hpp"
#include "distcent/experiments.hpp"

namespace distcent::cli {

namespace fs = std::filesystem;

namespace {

fs::path resolve_output(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            return fs::path(dir) / p;
        }
    }
    return p;
}

// Writes via a temporary sibling and rename, so a failure leaves no partial file.
void write_file(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
        f << content;
        f.flush();
        if (!f) throw Error("write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, path);
}

void emit(const std::string& output, const std::string& content, std::ostream& out) {
    if (output.empty() || output == "-") {
        out << content;
    } else {
        write_file(resolve_output(output), content);
    }
}

struct TopologyFlags {
    std::string topology = "sf";
    std::size_t n = 300;
    std::size_t m = 2;
    std::size_t nei = 2;
    std::optional<double> p;
    std::uint64_t seed = 1;
};

struct ExperimentFlags {
    TopologyFlags topo;
    std::size_t reps = 20;
    std::string alpha_grid = "0.5:0.25:3";
    bool weighted = false;
    bool unweighted = false;
    std::int64_t weight_low = 1;
    std::int64_t weight_high = 20;
    std::size_t jobs = 0;
};

void add_topology_flags(CLI::App* cmd, TopologyFlags& f) {
    cmd->add_option("--topology", f.topology, "Graph family: sf (scale-free), sw (small-world), er (Erdos-Renyi)")
        ->check(CLI::IsMember({"sf", "sw", "er"}))
        ->capture_default_str();
    cmd->add_option("--n", f.n, "Nodes per graph")->capture_default_str();
    cmd->add_option("--m", f.m, "Edges per new node (sf)")->capture_default_str();
    cmd->add_option("--nei", f.nei, "Lattice neighbors per side (sw)")->capture_default_str();
    cmd->add_option("--p", f.p, "Rewiring probability (sw, default 0.05) or edge probability (er, default 0.1)");
    cmd->add_option("--seed", f.seed, "Base seed")->capture_default_str();
}

GeneratorConfig to_generator(const TopologyFlags& f) {
    GeneratorConfig g;
    g.family = parse_topology(f.topology);
    g.n = f.n;
    g.m = f.m;
    g.nei = f.nei;
    if (f.p) {
        g.p = *f.p;
    } else {
        g.p = g.family == Topology::ErdosRenyi ? 0.1 : 0.05;
    }
    g.seed = f.seed;
    return g;
}

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
    add_topology_flags(cmd, f.topo);
    cmd->add_option("--reps", f.reps, "Replications (independent graphs)")->capture_default_str();
    auto* w = cmd->add_flag("--weighted", f.weighted, "Assign random integer edge weights");
    auto* u = cmd->add_flag("--unweighted", f.unweighted, "All edge weights 1 (default)");
    w->excludes(u);
    cmd->add_option("--weight-low", f.weight_low, "Smallest edge weight")->capture_default_str();
    cmd->add_option("--weight-high", f.weight_high, "Largest edge weight")->capture_default_str();
    cmd->add_option("--jobs", f.jobs, "Worker threads (0 = all cores)")->capture_default_str();
}

ExperimentConfig to_experiment(const ExperimentFlags& f, std::vector<double> grid) {
    ExperimentConfig cfg;
    cfg.topology = to_generator(f.topo);
    cfg.reps = f.reps;
    cfg.alpha_grid = std::move(grid);
    cfg.weights = WeightConfig{f.weighted, f.weight_low, f.weight_high};
    cfg.base_seed = f.topo.seed;
    cfg.jobs = f.jobs;
    return cfg;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            sizes.push_back(std::stoul(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidArgument("bad size '" + tok + "' in --sizes");
        }
    }
    return sizes;
}

}  // namespace

std::vector<double> parse_alpha_grid(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidArgument("bad alpha grid '" + spec + "' (expected start:step:end)");
        }
    }
    if (parts.size() != 3) throw InvalidArgument("bad alpha grid '" + spec + "' (expected start:step:end)");
    return make_alpha_grid(parts[0], parts[1], parts[2]);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distinctiveness, Beta and Gamma centrality on sparse graphs"};
    app.name("distcent");
    app.require_subcommand(1);

    // compute
    auto* compute_cmd = app.add_subcommand("compute", "Score every node of an edge-list graph");
    std::string input;
    std::string metric;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
    bool weighted_input = false;
    std::size_t max_dense = BetaOptions{}.max_dense_nodes;
    std::string compute_output;
    compute_cmd->add_option("--input", input, "Edge list: 'u v' or 'u v w' per line, '#' comments")->required();
    compute_cmd->add_option("--metric", metric, "d1..d5, beta, gamma, degree or strength")
        ->required()
        ->check(CLI::IsMember({"d1", "d2", "d3", "d4", "d5", "beta", "gamma", "degree", "strength"}));
    auto* alpha_opt = compute_cmd->add_option("--alpha", alpha, "Distinctiveness alpha (default 1)");
    auto* beta_opt = compute_cmd->add_option("--beta", beta, "Beta parameter (default 0)");
    auto* gamma_opt = compute_cmd->add_option("--gamma", gamma, "Gamma parameter (default 0)");
    alpha_opt->excludes(beta_opt)->excludes(gamma_opt);
    beta_opt->excludes(gamma_opt);
    compute_cmd->add_flag("--weighted", weighted_input, "Read the third column as edge weight");
    compute_cmd->add_option("--max-dense-nodes", max_dense, "Node cap for the dense Beta solve")->capture_default_str();
    compute_cmd->add_option("--output,-o", compute_output, "Output CSV (default stdout)");

    auto* experiment_cmd = app.add_subcommand("experiment", "Replication experiments on random graphs");
    experiment_cmd->require_subcommand(1);

    // experiment corr
    auto* corr_cmd = experiment_cmd->add_subcommand("corr", "Average Spearman correlations across an alpha grid");
    ExperimentFlags corr;
    std::string corr_output;
    add_experiment_flags(corr_cmd, corr);
    corr_cmd->add_option("--alpha-grid", corr.alpha_grid, "start:step:end, inclusive")->capture_default_str();
    corr_cmd->add_option("--output,-o", corr_output, "Output CSV (default stdout)");

    // experiment dist
    auto* dist_cmd = experiment_cmd->add_subcommand("dist", "Normalized score distributions and Ruzicka similarity");
    ExperimentFlags dist;
    dist.topo.n = 1000;
    double dist_alpha = 1.0;
    std::size_t bins = 100;
    std::string scores_output = "dist_scores.csv";
    std::string ruzicka_output = "dist_ruzicka.csv";
    add_experiment_flags(dist_cmd, dist);
    dist_cmd->add_option("--alpha", dist_alpha, "Distinctiveness alpha")->capture_default_str();
    dist_cmd->add_option("--bins", bins, "Histogram bins for the histogram-mode index")->capture_default_str();
    dist_cmd->add_option("--scores-output", scores_output, "Normalized scores CSV")->capture_default_str();
    dist_cmd->add_option("--ruzicka-output", ruzicka_output, "Ruzicka CSV")->capture_default_str();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Runtime scaling of each metric with graph size");
    TopologyFlags bench_topo;
    bench_topo.topology = "er";
    bench_topo.p = 0.2;
    std::string sizes_spec = "200,400,800,1600";
    std::size_t bench_reps = 5;
    double bench_alpha = 1.0;
    double min_sample = ScalingOptions{}.min_sample_seconds;
    std::string bench_output;
    add_topology_flags(bench_cmd, bench_topo);
    bench_cmd->add_option("--sizes", sizes_spec, "Comma-separated, strictly increasing node counts")
        ->capture_default_str();
    bench_cmd->add_option("--reps", bench_reps, "Graphs per size")->capture_default_str();
    bench_cmd->add_option("--alpha", bench_alpha, "Parameter point (Beta/Gamma harmonized)")->capture_default_str();
    bench_cmd->add_option("--min-sample-seconds", min_sample, "Minimum wall time per timing sample")
        ->capture_default_str();
    bench_cmd->add_option("--output,-o", bench_output, "Output CSV (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*compute_cmd) {
            std::ifstream in(input);
            if (!in) throw Error("cannot open edge list '" + input + "'");
            const auto lg = read_edge_list(in, weighted_input);
            const MetricKind kind = parse_metric(metric);
            double param = 0.0;
            switch (kind) {
                case MetricKind::D1:
                case MetricKind::D2:
                case MetricKind::D3:
                case MetricKind::D4:
                case MetricKind::D5:
                    if (beta || gamma) throw InvalidArgument("--" + metric + " takes --alpha only");
                    param = alpha.value_or(1.0);
                    break;
                case MetricKind::Beta:
                    if (alpha || gamma) throw InvalidArgument("beta takes --beta only");
                    param = beta.value_or(0.0);
                    break;
                case MetricKind::Gamma:
                    if (alpha || beta) throw InvalidArgument("gamma takes --gamma only");
                    param = gamma.value_or(0.0);
                    break;
                case MetricKind::Degree:
                case MetricKind::Strength:
                    if (alpha || beta || gamma) throw InvalidArgument(metric + " takes no parameter");
                    break;
            }
            BetaOptions beta_opts;
            beta_opts.max_dense_nodes = max_dense;
            const auto scores = distcent::compute(lg.graph, MetricSpec{kind, param}, beta_opts);
            std::ostringstream csv_out;
            csv::write_scores(csv_out, scores, lg.labels);
            emit(compute_output, csv_out.str(), out);
        } else if (*corr_cmd) {
            const auto cfg = to_experiment(corr, parse_alpha_grid(corr.alpha_grid));
            const auto records = run_correlation_experiment(cfg);
            std::ostringstream csv_out;
            csv::write_correlations(csv_out, records);
            emit(corr_output, csv_out.str(), out);
        } else if (*dist_cmd) {
            const auto cfg = to_experiment(dist, {dist_alpha});
            const auto result = run_distribution_experiment(cfg, bins);
            std::ostringstream scores_csv;
            std::ostringstream ruzicka_csv;
            csv::write_distribution_scores(scores_csv, result.scores);
            csv::write_ruzicka(ruzicka_csv, result.ruzicka);
            write_file(resolve_output(scores_output), scores_csv.str());
            write_file(resolve_output(ruzicka_output), ruzicka_csv.str());
        } else if (*bench_cmd) {
            ScalingOptions opts;
            opts.alpha = bench_alpha;
            opts.min_sample_seconds = min_sample;
            opts.base_seed = bench_topo.seed;
            const auto records =
                run_scaling_benchmark(parse_sizes(sizes_spec), to_generator(bench_topo), bench_reps, opts);
            std::ostringstream csv_out;
            csv::write_scaling(csv_out, records);
            emit(bench_output, csv_out.str(), out);
        }
    } catch (const std::exception& e) {
        err << "distcent: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace distcent::cli
