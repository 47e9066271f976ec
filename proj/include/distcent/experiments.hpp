#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "distcent/centrality.hpp"
#include "distcent/randgen.hpp"

namespace distcent {

/// Inclusive grid start, start + step, ..., with the end point kept when it
/// lies within 1e-12 of a grid value. Values are computed as start + k * step.
std::vector<double> make_alpha_grid(double start, double step, double end);

struct ExperimentConfig {
    /// Topology family and parameters; the seed field is ignored in favor of
    /// seeds derived from base_seed per replication.
    GeneratorConfig topology;
    std::size_t reps = 20;
    std::vector<double> alpha_grid = make_alpha_grid(0.5, 0.25, 3.0);
    WeightConfig weights;
    std::uint64_t base_seed = 1;
    /// Metrics to compare. Empty selects the standard panel for the weighting.
    std::vector<MetricKind> metrics;
    /// Worker threads for replications; 0 means one per hardware thread.
    std::size_t jobs = 1;
};

void validate(const ExperimentConfig& cfg);

/// The graph used for replication `rep`: generator seeded with
/// derive_seed(base_seed, rep), weights seeded with derive_seed(that, 1).
Graph replication_graph(const ExperimentConfig& cfg, std::size_t rep);

/// {D2, D3, D5, Beta, Gamma} unweighted, {D1, D3, D4, Beta, Gamma} weighted.
std::vector<MetricKind> default_panel(bool weighted);

using MetricPanel = std::map<std::string, ScoreVector>;

/// Scores for each metric keyed by metric name. D-metrics take alpha; Beta
/// and Gamma take the harmonized parameters for (alpha, lambda1).
MetricPanel metric_panel(const Graph& g, double alpha, bool weighted);
MetricPanel metric_panel(const Graph& g, double alpha, double lambda1, const std::vector<MetricKind>& metrics);

struct CorrelationRecord {
    Topology topology;
    bool weighted;
    double alpha;
    std::string metric_a;
    std::string metric_b;
    double mean_spearman;
    /// Sample standard deviation; 0 when only one replication was used.
    double sd_spearman;
    std::size_t reps_used;
    std::size_t reps_skipped;
};

/// Average per-graph Spearman correlation for every unordered metric pair at
/// every alpha. A replication is skipped at an alpha (for all pairs) when any
/// pair's correlation is undefined there. Records are sorted by
/// (alpha, metric_a, metric_b) with metric_a < metric_b. Output is
/// independent of cfg.jobs.
std::vector<CorrelationRecord> run_correlation_experiment(const ExperimentConfig& cfg);

enum class RuzickaMode { NodeAligned, Histogram };
std::string_view ruzicka_mode_name(RuzickaMode mode) noexcept;  // "node-aligned", "histogram"

struct RuzickaRecord {
    Topology topology;
    bool weighted;
    double alpha;
    std::string metric_a;
    std::string metric_b;
    RuzickaMode mode;
    double ruzicka;
};

struct NormalizedScore {
    double alpha;
    std::string metric;
    Node node;
    double value;
};

struct DistributionResult {
    std::vector<NormalizedScore> scores;
    std::vector<RuzickaRecord> ruzicka;
};

/// One graph (replication 0). For every alpha: min-max normalized panel
/// scores, and Ruzicka similarity for every pair metric_a <= metric_b
/// (diagonal included) in node-aligned and histogram mode.
DistributionResult run_distribution_experiment(const ExperimentConfig& cfg, std::size_t bins = 100);

struct ScalingRecord {
    std::string metric;
    std::size_t n;
    double median_runtime_seconds;
    double loglog_slope;
};

struct ScalingOptions {
    std::vector<MetricKind> metrics = {MetricKind::D1, MetricKind::D2, MetricKind::D3, MetricKind::D4,
                                       MetricKind::D5, MetricKind::Gamma, MetricKind::Beta};
    /// Parameter point; Beta and Gamma use the harmonized values.
    double alpha = 1.0;
    /// Each timing sample repeats the metric until at least this long has elapsed.
    double min_sample_seconds = 0.02;
    std::uint64_t base_seed = 1;
};

/// Median per-call runtime of each metric at each size, over `reps` graphs
/// per size, plus the least-squares slope of ln(time) against ln(n). Degrees
/// and lambda1 are computed before timing starts. Single-threaded.
std::vector<ScalingRecord> run_scaling_benchmark(const std::vector<std::size_t>& sizes, const GeneratorConfig& family,
                                                 std::size_t reps, const ScalingOptions& opts = {});

/// Least-squares slope of ln(y) on ln(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace distcent
