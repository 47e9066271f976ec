#include "distcent/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>
#include <tuple>

#include "distcent/error.hpp"
#include "distcent/rng.hpp"
#include "distcent/stats.hpp"

namespace distcent {

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Rethrows the
// exception of the lowest failing index.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(count, 1));
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// Pairs (a, b) with a < b by name, or a <= b with `diagonal`.
std::vector<std::pair<std::string, std::string>> unordered_pairs(const std::vector<MetricKind>& metrics,
                                                                 bool diagonal) {
    std::vector<std::string> names;
    for (MetricKind k : metrics) names.emplace_back(metric_name(k));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t a = 0; a < names.size(); ++a) {
        for (std::size_t b = diagonal ? a : a + 1; b < names.size(); ++b) {
            out.emplace_back(names[a], names[b]);
        }
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<double> make_alpha_grid(double start, double step, double end) {
    if (!(start > 0.0) || !std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step)) {
        throw InvalidArgument("alpha grid: start must be positive and all bounds finite");
    }
    if (end < start) throw InvalidArgument("alpha grid: end below start");
    if (!(step > 0.0)) {
        if (std::abs(end - start) <= 1e-12) return {start};
        throw InvalidArgument("alpha grid: step must be positive");
    }
    std::vector<double> grid;
    for (std::size_t k = 0;; ++k) {
        const double a = start + static_cast<double>(k) * step;
        if (a > end + 1e-12) break;
        grid.push_back(a);
    }
    return grid;
}

void validate(const ExperimentConfig& cfg) {
    validate(cfg.topology);
    if (cfg.reps < 1) throw InvalidArgument("experiment: reps must be at least 1");
    if (cfg.alpha_grid.empty()) throw InvalidArgument("experiment: alpha grid is empty");
    for (double a : cfg.alpha_grid) {
        if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("experiment: alpha values must be positive");
    }
    if (!std::is_sorted(cfg.alpha_grid.begin(), cfg.alpha_grid.end())) {
        throw InvalidArgument("experiment: alpha grid must be sorted");
    }
}

Graph replication_graph(const ExperimentConfig& cfg, std::size_t rep) {
    GeneratorConfig gen = cfg.topology;
    gen.seed = derive_seed(cfg.base_seed, rep);
    Graph g = generate(gen);
    if (cfg.weights.weighted) {
        g = assign_weights(g, cfg.weights, derive_seed(gen.seed, 1));
    }
    return g;
}

std::vector<MetricKind> default_panel(bool weighted) {
    if (weighted) return {MetricKind::D1, MetricKind::D3, MetricKind::D4, MetricKind::Beta, MetricKind::Gamma};
    return {MetricKind::D2, MetricKind::D3, MetricKind::D5, MetricKind::Beta, MetricKind::Gamma};
}

MetricPanel metric_panel(const Graph& g, double alpha, bool weighted) {
    return metric_panel(g, alpha, dominant_eigenvalue(g), default_panel(weighted));
}

MetricPanel metric_panel(const Graph& g, double alpha, double lambda1, const std::vector<MetricKind>& metrics) {
    const auto params = harmonize(alpha, lambda1);
    BetaOptions beta_opts;
    beta_opts.lambda1 = lambda1;
    MetricPanel panel;
    for (MetricKind kind : metrics) {
        double param = alpha;
        if (kind == MetricKind::Beta) param = params.beta;
        if (kind == MetricKind::Gamma) param = params.gamma;
        panel.emplace(std::string(metric_name(kind)), compute(g, MetricSpec{kind, param}, beta_opts));
    }
    return panel;
}

std::vector<CorrelationRecord> run_correlation_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    const auto metrics = cfg.metrics.empty() ? default_panel(cfg.weights.weighted) : cfg.metrics;
    const std::size_t n_alpha = cfg.alpha_grid.size();

    // per_rep[rep][alpha] holds one correlation per pair, or nothing when skipped.
    using AlphaRow = std::optional<std::vector<double>>;
    std::vector<std::vector<AlphaRow>> per_rep(cfg.reps, std::vector<AlphaRow>(n_alpha));
    const auto pairs = unordered_pairs(metrics, false);

    parallel_for(cfg.reps, cfg.jobs, [&](std::size_t rep) {
        const Graph g = replication_graph(cfg, rep);
        const double lambda1 = dominant_eigenvalue(g);
        for (std::size_t ai = 0; ai < n_alpha; ++ai) {
            const auto panel = metric_panel(g, cfg.alpha_grid[ai], lambda1, metrics);
            std::vector<double> rhos;
            rhos.reserve(pairs.size());
            bool defined = true;
            for (const auto& [a, b] : pairs) {
                try {
                    rhos.push_back(spearman(panel.at(a), panel.at(b)));
                } catch (const Undefined&) {
                    defined = false;
                    break;
                }
            }
            if (defined) per_rep[rep][ai] = std::move(rhos);
        }
    });

    std::vector<CorrelationRecord> records;
    records.reserve(n_alpha * pairs.size());
    for (std::size_t ai = 0; ai < n_alpha; ++ai) {
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            std::vector<double> values;
            for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
                if (per_rep[rep][ai]) values.push_back((*per_rep[rep][ai])[pi]);
            }
            if (values.empty()) {
                throw Undefined("correlation experiment: every replication skipped at alpha " +
                                std::to_string(cfg.alpha_grid[ai]) + " for " + pairs[pi].first + "/" +
                                pairs[pi].second);
            }
            double sum = 0.0;
            for (double v : values) sum += v;
            const double mean = sum / static_cast<double>(values.size());
            double ss = 0.0;
            for (double v : values) ss += (v - mean) * (v - mean);
            const double sd = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
            records.push_back(CorrelationRecord{cfg.topology.family, cfg.weights.weighted, cfg.alpha_grid[ai],
                                                pairs[pi].first, pairs[pi].second, mean, sd, values.size(),
                                                cfg.reps - values.size()});
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const CorrelationRecord& x, const CorrelationRecord& y) {
        return std::tie(x.alpha, x.metric_a, x.metric_b) < std::tie(y.alpha, y.metric_a, y.metric_b);
    });
    return records;
}

std::string_view ruzicka_mode_name(RuzickaMode mode) noexcept {
    return mode == RuzickaMode::NodeAligned ? "node-aligned" : "histogram";
}

DistributionResult run_distribution_experiment(const ExperimentConfig& cfg, std::size_t bins) {
    validate(cfg);
    if (bins == 0) throw InvalidArgument("distribution experiment: bins must be positive");
    const auto metrics = cfg.metrics.empty() ? default_panel(cfg.weights.weighted) : cfg.metrics;
    const Graph g = replication_graph(cfg, 0);
    const double lambda1 = dominant_eigenvalue(g);

    DistributionResult out;
    for (double alpha : cfg.alpha_grid) {
        const auto panel = metric_panel(g, alpha, lambda1, metrics);
        std::map<std::string, std::vector<double>> normalized;
        std::map<std::string, std::vector<double>> masses;
        for (const auto& [name, scores] : panel) {
            auto norm = normalize_minmax(std::span<const double>(scores.scores));
            for (std::size_t i = 0; i < norm.size(); ++i) {
                out.scores.push_back({alpha, name, static_cast<Node>(i), norm[i]});
            }
            masses[name] = histogram(norm, bins).masses;
            normalized[name] = std::move(norm);
        }
        for (const auto& [a, b] : unordered_pairs(metrics, true)) {
            out.ruzicka.push_back({cfg.topology.family, cfg.weights.weighted, alpha, a, b, RuzickaMode::NodeAligned,
                                   ruzicka(normalized.at(a), normalized.at(b))});
            out.ruzicka.push_back({cfg.topology.family, cfg.weights.weighted, alpha, a, b, RuzickaMode::Histogram,
                                   ruzicka(masses.at(a), masses.at(b))});
        }
    }
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("loglog_slope: need two or more paired points");
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InvalidArgument("loglog_slope: values must be positive");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw InvalidArgument("loglog_slope: x values are all equal");
    return sxy / sxx;
}

std::vector<ScalingRecord> run_scaling_benchmark(const std::vector<std::size_t>& sizes, const GeneratorConfig& family,
                                                 std::size_t reps, const ScalingOptions& opts) {
    if (sizes.size() < 3) throw InvalidArgument("scaling benchmark: need at least three sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
        throw InvalidArgument("scaling benchmark: sizes must be strictly increasing");
    }
    if (reps < 1) throw InvalidArgument("scaling benchmark: reps must be at least 1");
    if (opts.metrics.empty()) throw InvalidArgument("scaling benchmark: no metrics selected");
    using Clock = std::chrono::steady_clock;
    constexpr double tick = static_cast<double>(Clock::period::num) / static_cast<double>(Clock::period::den);
    if (tick > opts.min_sample_seconds / 100.0) {
        throw Error("scaling benchmark: steady clock resolution is too coarse for the sample length");
    }

    // samples[metric][size] -> per-rep seconds per call
    std::vector<std::vector<std::vector<double>>> samples(
        opts.metrics.size(), std::vector<std::vector<double>>(sizes.size()));
    volatile double sink = 0.0;

    for (std::size_t si = 0; si < sizes.size(); ++si) {
        for (std::size_t rep = 0; rep < reps; ++rep) {
            GeneratorConfig gen = family;
            gen.n = sizes[si];
            gen.seed = derive_seed(derive_seed(opts.base_seed, sizes[si]), rep);
            const Graph g = generate(gen);
            const double lambda1 = dominant_eigenvalue(g);
            const auto params = harmonize(opts.alpha, lambda1);
            BetaOptions beta_opts;
            beta_opts.lambda1 = lambda1;

            for (std::size_t mi = 0; mi < opts.metrics.size(); ++mi) {
                const MetricKind kind = opts.metrics[mi];
                double param = opts.alpha;
                if (kind == MetricKind::Beta) param = params.beta;
                if (kind == MetricKind::Gamma) param = params.gamma;
                const MetricSpec spec{kind, param};

                std::size_t calls = 0;
                const auto start = Clock::now();
                double elapsed = 0.0;
                do {
                    const auto scores = compute(g, spec, beta_opts);
                    sink = sink + scores.scores.front();
                    ++calls;
                    elapsed = seconds_since(start);
                } while (elapsed < opts.min_sample_seconds);
                samples[mi][si].push_back(elapsed / static_cast<double>(calls));
            }
        }
    }

    std::vector<ScalingRecord> records;
    std::vector<double> ns(sizes.begin(), sizes.end());
    for (std::size_t mi = 0; mi < opts.metrics.size(); ++mi) {
        std::vector<double> medians;
        for (std::size_t si = 0; si < sizes.size(); ++si) {
            medians.push_back(median(samples[mi][si]));
            if (!(medians.back() > 0.0)) {
                throw Error("scaling benchmark: zero runtime measured for " +
                            std::string(metric_name(opts.metrics[mi])) + " at n=" + std::to_string(sizes[si]) +
                            "; timer resolution too coarse");
            }
        }
        const double slope = loglog_slope(ns, medians);
        for (std::size_t si = 0; si < sizes.size(); ++si) {
            records.push_back({std::string(metric_name(opts.metrics[mi])), sizes[si], medians[si], slope});
        }
    }
    return records;
}

}  // namespace distcent
