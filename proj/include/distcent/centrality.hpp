#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distcent/graph.hpp"

namespace distcent {

enum class MetricKind { D1, D2, D3, D4, D5, Beta, Gamma, Degree, Strength };

/// Lower-case metric name used in CSV output and on the command line ("d1", "beta", ...).
std::string_view metric_name(MetricKind kind) noexcept;
/// Inverse of metric_name. Throws InvalidArgument on an unknown name.
MetricKind parse_metric(std::string_view name);

/// Metric selector plus its tuning parameter: alpha for D1-D5, beta for
/// Beta, gamma for Gamma. Ignored for Degree and Strength.
struct MetricSpec {
    MetricKind kind = MetricKind::Degree;
    double param = 0.0;

    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

struct ScoreVector {
    std::vector<double> scores;
    MetricSpec metric;
    std::uint64_t graph_fingerprint = 0;

    std::size_t size() const noexcept { return scores.size(); }
    double operator[](std::size_t i) const { return scores[i]; }
};

/// Per-neighbor D1/D2 term log10((n - 1) / g^alpha), evaluated as
/// log10(n - 1) - alpha * log10(g) so the alpha dependence is exactly linear.
double distinctiveness_log_term(std::size_t node_count, std::size_t neighbor_degree, double alpha);

// Distinctiveness metrics. Sums run over actual neighbors only, so isolates
// score exactly 0. D1, D2 and D5 use the neighbor count g_j even on weighted
// graphs; D3 and D4 use sums of w^alpha.
ScoreVector d1(const Graph& g, double alpha);
ScoreVector d2(const Graph& g, double alpha);
ScoreVector d3(const Graph& g, double alpha);
ScoreVector d4(const Graph& g, double alpha);
ScoreVector d5(const Graph& g, double alpha);

struct BetaOptions {
    /// Largest graph the dense solve will materialize.
    std::size_t max_dense_nodes = 5000;
    /// Precomputed dominant eigenvalue; computed on demand when the cheap
    /// max-strength bound cannot certify |beta| * lambda1 < 1.
    std::optional<double> lambda1;
};

/// Bonacich power centrality: solves (I - beta A) x = A 1 by LU with partial
/// pivoting on a dense copy of A.
ScoreVector beta_centrality(const Graph& g, double beta, const BetaOptions& opts = {});

/// Gamma centrality: x_i = sum_j w_ij * s_j^gamma with s the strength vector.
ScoreVector gamma_centrality(const Graph& g, double gamma);

struct EigenOptions {
    double relative_tolerance = 1e-10;
    std::size_t max_iterations = 10'000;
};

/// Largest eigenvalue of the weight matrix by power iteration from the
/// uniform vector. The estimate is ||A x|| for unit x, which converges to
/// the spectral radius (= lambda1 for a nonnegative matrix) even on
/// bipartite graphs where the iterate itself oscillates.
double dominant_eigenvalue(const Graph& g, const EigenOptions& opts = {});

struct HarmonizedParams {
    double gamma;
    double beta;
};

/// gamma = -alpha and beta = (2 / e^alpha - 1) / lambda1.
HarmonizedParams harmonize(double alpha, double lambda1);

/// Dispatches on spec.kind. Degree and Strength return the cached vectors.
ScoreVector compute(const Graph& g, const MetricSpec& spec, const BetaOptions& beta_opts = {});

}  // namespace distcent
