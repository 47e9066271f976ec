#pragma once

#include <span>
#include <vector>

#include "distcent/centrality.hpp"

namespace distcent {

/// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> x);

/// Spearman's rho as the Pearson correlation of average ranks.
/// Throws InvalidArgument on length mismatch or fewer than two entries, and
/// Undefined when either side has zero rank variance.
double spearman(std::span<const double> x, std::span<const double> y);
double spearman(const ScoreVector& x, const ScoreVector& y);

/// (x - min) / (max - min). Constant input maps to all zeros.
std::vector<double> normalize_minmax(std::span<const double> x);
ScoreVector normalize_minmax(const ScoreVector& x);

/// sum(min(p_i, q_i)) / sum(max(p_i, q_i)) for nonnegative inputs.
/// Throws Undefined when both inputs are all zero.
double ruzicka(std::span<const double> p, std::span<const double> q);

struct Histogram {
    std::vector<double> bin_edges;
    std::vector<double> masses;
};

/// Equal-width bins on [0, 1]; bins are [lo, hi) except the last, which is
/// closed. Masses are fractions of the input and sum to 1.
Histogram histogram(std::span<const double> x, std::size_t bins);

}  // namespace distcent
