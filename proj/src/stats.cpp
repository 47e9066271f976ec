#include "distcent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "distcent/error.hpp"

namespace distcent {

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
        // positions i..j-1 hold ranks i+1..j
        const double avg = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
        i = j;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw InvalidArgument("spearman: length mismatch (" + std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw InvalidArgument("spearman: need at least two observations");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw InvalidArgument("spearman: non-finite input at index " + std::to_string(i));
        }
    }
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    // Both rank vectors have mean (n + 1) / 2.
    const double mean = 0.5 * static_cast<double>(x.size() + 1);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Undefined("spearman: zero rank variance (constant input)");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(const ScoreVector& x, const ScoreVector& y) {
    return spearman(std::span<const double>(x.scores), std::span<const double>(y.scores));
}

std::vector<double> normalize_minmax(std::span<const double> x) {
    std::vector<double> out(x.size(), 0.0);
    if (x.empty()) return out;
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    const double range = *hi - *lo;
    if (range == 0.0) return out;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - *lo) / range;
    return out;
}

ScoreVector normalize_minmax(const ScoreVector& x) {
    return ScoreVector{normalize_minmax(std::span<const double>(x.scores)), x.metric, x.graph_fingerprint};
}

double ruzicka(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw InvalidArgument("ruzicka: length mismatch (" + std::to_string(p.size()) + " vs " +
                              std::to_string(q.size()) + ")");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0) || !(q[i] >= 0.0) || !std::isfinite(p[i]) || !std::isfinite(q[i])) {
            throw InvalidArgument("ruzicka: entries must be finite and nonnegative (index " + std::to_string(i) + ")");
        }
        num += std::min(p[i], q[i]);
        den += std::max(p[i], q[i]);
    }
    if (den == 0.0) throw Undefined("ruzicka: both inputs are all zero");
    return num / den;
}

Histogram histogram(std::span<const double> x, std::size_t bins) {
    if (bins == 0) throw InvalidArgument("histogram: bins must be positive");
    if (x.empty()) throw InvalidArgument("histogram: empty input");
    Histogram h;
    h.bin_edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) {
        h.bin_edges[b] = static_cast<double>(b) / static_cast<double>(bins);
    }
    std::vector<std::size_t> counts(bins, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
            throw InvalidArgument("histogram: entry " + std::to_string(i) + " = " + std::to_string(x[i]) +
                                  " outside [0, 1]");
        }
        const auto b = std::min(static_cast<std::size_t>(x[i] * static_cast<double>(bins)), bins - 1);
        ++counts[b];
    }
    h.masses.resize(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        h.masses[b] = static_cast<double>(counts[b]) / static_cast<double>(x.size());
    }
    return h;
}

}  // namespace distcent
