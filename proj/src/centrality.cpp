#include "distcent/centrality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "distcent/error.hpp"

namespace distcent {

namespace {

constexpr std::array<std::pair<MetricKind, std::string_view>, 9> kMetricNames{{
    {MetricKind::D1, "d1"},
    {MetricKind::D2, "d2"},
    {MetricKind::D3, "d3"},
    {MetricKind::D4, "d4"},
    {MetricKind::D5, "d5"},
    {MetricKind::Beta, "beta"},
    {MetricKind::Gamma, "gamma"},
    {MetricKind::Degree, "degree"},
    {MetricKind::Strength, "strength"},
}};

void require_alpha(std::string_view metric, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument(std::string(metric) + ": alpha must be a finite positive number, got " +
                              std::to_string(alpha));
    }
}

void require_min_nodes(std::string_view metric, const Graph& g, std::size_t min_nodes) {
    if (g.node_count() < min_nodes) {
        throw InvalidArgument(std::string(metric) + " requires at least " + std::to_string(min_nodes) +
                              " nodes, graph has " + std::to_string(g.node_count()));
    }
}

[[noreturn]] void non_finite(std::string_view metric, std::size_t node, std::size_t neighbor, double term) {
    throw NumericError(std::string(metric) + ": non-finite term " + std::to_string(term) + " at node " +
                       std::to_string(node) + " from neighbor " + std::to_string(neighbor));
}

// Accumulates sum_j weight(i, j) * node_term[j] over the neighbors of every
// node, in CSR row order.
template <typename EdgeTerm>
std::vector<double> accumulate_rows(const Graph& g, std::string_view metric, EdgeTerm&& term) {
    std::vector<double> out(g.node_count(), 0.0);
    for (Node i = 0; i < g.node_count(); ++i) {
        const auto nbrs = g.neighbors(i);
        const auto ws = g.weights(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const double t = term(i, nbrs[k], ws[k]);
            if (!std::isfinite(t)) non_finite(metric, i, nbrs[k], t);
            acc += t;
        }
        out[i] = acc;
    }
    return out;
}

ScoreVector make_scores(const Graph& g, MetricKind kind, double param, std::vector<double> scores) {
    return ScoreVector{std::move(scores), MetricSpec{kind, param}, g.fingerprint()};
}

// log term per node for D1/D2; zero-degree entries are never read.
std::vector<double> log_terms(const Graph& g, double alpha) {
    std::vector<double> out(g.node_count(), 0.0);
    for (std::size_t j = 0; j < g.node_count(); ++j) {
        if (g.degrees()[j] > 0) out[j] = distinctiveness_log_term(g.node_count(), g.degrees()[j], alpha);
    }
    return out;
}

}  // namespace

std::string_view metric_name(MetricKind kind) noexcept {
    for (const auto& [k, name] : kMetricNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

MetricKind parse_metric(std::string_view name) {
    for (const auto& [k, n] : kMetricNames) {
        if (n == name) return k;
    }
    throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

double distinctiveness_log_term(std::size_t node_count, std::size_t neighbor_degree, double alpha) {
    return std::log10(static_cast<double>(node_count - 1)) - alpha * std::log10(static_cast<double>(neighbor_degree));
}

ScoreVector d1(const Graph& g, double alpha) {
    require_alpha("d1", alpha);
    require_min_nodes("d1", g, 2);
    const auto terms = log_terms(g, alpha);
    return make_scores(g, MetricKind::D1, alpha,
                       accumulate_rows(g, "d1", [&](Node, Node j, double w) { return w * terms[j]; }));
}

ScoreVector d2(const Graph& g, double alpha) {
    require_alpha("d2", alpha);
    require_min_nodes("d2", g, 2);
    const auto terms = log_terms(g, alpha);
    return make_scores(g, MetricKind::D2, alpha,
                       accumulate_rows(g, "d2", [&](Node, Node j, double) { return terms[j]; }));
}

ScoreVector d3(const Graph& g, double alpha) {
    require_alpha("d3", alpha);
    require_min_nodes("d3", g, 2);
    if (g.edge_count() == 0) {
        throw InvalidArgument("d3 is undefined on an edgeless graph");
    }
    const double total = g.total_weight();
    const auto alpha_strength = g.alpha_strengths(alpha);
    return make_scores(g, MetricKind::D3, alpha, accumulate_rows(g, "d3", [&](Node i, Node j, double w) {
                           const double denom = alpha_strength[j] - std::pow(w, alpha) + 1.0;
                           if (!(denom >= 1.0)) {
                               throw NumericError("d3: denominator " + std::to_string(denom) +
                                                  " below 1 on edge (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ")");
                           }
                           return w * std::log10(total / denom);
                       }));
}

ScoreVector d4(const Graph& g, double alpha) {
    require_alpha("d4", alpha);
    require_min_nodes("d4", g, 2);
    const auto alpha_strength = g.alpha_strengths(alpha);
    return make_scores(g, MetricKind::D4, alpha, accumulate_rows(g, "d4", [&](Node, Node j, double w) {
                           return w * std::pow(w, alpha) / alpha_strength[j];
                       }));
}

ScoreVector d5(const Graph& g, double alpha) {
    require_alpha("d5", alpha);
    require_min_nodes("d5", g, 1);
    // g^-alpha rather than 1/g^alpha: bitwise identical to the gamma term on
    // unweighted graphs, where strength == degree.
    std::vector<double> inv(g.node_count(), 0.0);
    for (std::size_t j = 0; j < g.node_count(); ++j) {
        if (g.degrees()[j] > 0) inv[j] = std::pow(static_cast<double>(g.degrees()[j]), -alpha);
    }
    return make_scores(g, MetricKind::D5, alpha,
                       accumulate_rows(g, "d5", [&](Node, Node j, double) { return inv[j]; }));
}

ScoreVector gamma_centrality(const Graph& g, double gamma) {
    if (!std::isfinite(gamma)) {
        throw InvalidArgument("gamma: parameter must be finite");
    }
    const auto& s = g.strengths();
    std::vector<double> powered(g.node_count(), 0.0);
    for (std::size_t j = 0; j < g.node_count(); ++j) {
        if (g.degrees()[j] > 0) powered[j] = std::pow(s[j], gamma);
    }
    return make_scores(g, MetricKind::Gamma, gamma,
                       accumulate_rows(g, "gamma", [&](Node, Node j, double w) { return w * powered[j]; }));
}

ScoreVector beta_centrality(const Graph& g, double beta, const BetaOptions& opts) {
    if (!std::isfinite(beta)) {
        throw InvalidArgument("beta: parameter must be finite");
    }
    const std::size_t n = g.node_count();
    if (n > opts.max_dense_nodes) {
        throw InvalidArgument("beta: graph has " + std::to_string(n) + " nodes, above the dense-solve cap of " +
                              std::to_string(opts.max_dense_nodes));
    }
    if (beta != 0.0 && g.edge_count() > 0) {
        // lambda1 <= max strength, so this bound certifies convergence without an eigen solve.
        const double max_strength = *std::max_element(g.strengths().begin(), g.strengths().end());
        if (!(std::abs(beta) * max_strength < 1.0)) {
            const double lambda1 = opts.lambda1 ? *opts.lambda1 : dominant_eigenvalue(g);
            if (!(std::abs(beta) * lambda1 < 1.0)) {
                throw InvalidArgument("beta: |beta| * lambda1 = " + std::to_string(std::abs(beta) * lambda1) +
                                      " must be below 1");
            }
        }
    }

    const auto& strength = g.strengths();
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) rhs(static_cast<Eigen::Index>(i)) = strength[i];
    if (n == 0) return make_scores(g, MetricKind::Beta, beta, {});

    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Node i = 0; i < n; ++i) {
        const auto nbrs = g.neighbors(i);
        const auto ws = g.weights(i);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            system(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(nbrs[k])) = -beta * ws[k];
        }
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    const Eigen::VectorXd x = lu.solve(rhs);

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x(static_cast<Eigen::Index>(i));
        if (!std::isfinite(out[i])) {
            throw NumericError("beta: singular system, non-finite score at node " + std::to_string(i));
        }
    }
    const double residual = (system * x - rhs).lpNorm<Eigen::Infinity>();
    const double scale = system.lpNorm<Eigen::Infinity>() * x.lpNorm<Eigen::Infinity>() + rhs.lpNorm<Eigen::Infinity>();
    if (residual > 1e-8 * std::max(scale, 1.0)) {
        throw NumericError("beta: solve residual " + std::to_string(residual) + " indicates a singular system");
    }
    return make_scores(g, MetricKind::Beta, beta, std::move(out));
}

double dominant_eigenvalue(const Graph& g, const EigenOptions& opts) {
    if (g.edge_count() == 0) {
        throw InvalidArgument("dominant_eigenvalue requires at least one edge");
    }
    const std::size_t n = g.node_count();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double estimate = 0.0;
    double change = 0.0;
    for (std::size_t iter = 0; iter < opts.max_iterations; ++iter) {
        double norm2 = 0.0;
        for (Node i = 0; i < n; ++i) {
            const auto nbrs = g.neighbors(i);
            const auto ws = g.weights(i);
            double acc = 0.0;
            for (std::size_t k = 0; k < nbrs.size(); ++k) acc += ws[k] * x[nbrs[k]];
            y[i] = acc;
            norm2 += acc * acc;
        }
        // ||A x|| with ||x|| = 1.
        const double next = std::sqrt(norm2);
        if (!(next > 0.0) || !std::isfinite(next)) {
            throw NumericError("dominant_eigenvalue: iterate collapsed (norm " + std::to_string(next) + ")");
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / next;
        change = std::abs(next - estimate) / next;
        estimate = next;
        if (iter > 0 && change <= opts.relative_tolerance) {
            return estimate;
        }
    }
    throw NotConverged("dominant_eigenvalue: no convergence in " + std::to_string(opts.max_iterations) +
                           " iterations",
                       change);
}

HarmonizedParams harmonize(double alpha, double lambda1) {
    if (!(lambda1 > 0.0) || !std::isfinite(lambda1)) {
        throw InvalidArgument("harmonize: lambda1 must be positive");
    }
    require_alpha("harmonize", alpha);
    return {-alpha, (2.0 / std::exp(alpha) - 1.0) / lambda1};
}

ScoreVector compute(const Graph& g, const MetricSpec& spec, const BetaOptions& beta_opts) {
    switch (spec.kind) {
        case MetricKind::D1: return d1(g, spec.param);
        case MetricKind::D2: return d2(g, spec.param);
        case MetricKind::D3: return d3(g, spec.param);
        case MetricKind::D4: return d4(g, spec.param);
        case MetricKind::D5: return d5(g, spec.param);
        case MetricKind::Beta: return beta_centrality(g, spec.param, beta_opts);
        case MetricKind::Gamma: return gamma_centrality(g, spec.param);
        case MetricKind::Degree: {
            std::vector<double> deg(g.degrees().begin(), g.degrees().end());
            return make_scores(g, MetricKind::Degree, spec.param, std::move(deg));
        }
        case MetricKind::Strength: return make_scores(g, MetricKind::Strength, spec.param, g.strengths());
    }
    throw InvalidArgument("compute: unhandled metric kind");
}

}  // namespace distcent
