#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "distcent/centrality.hpp"
#include "distcent/edge_list.hpp"
#include "distcent/experiments.hpp"

namespace distcent::csv {

/// Fixed notation with six decimals, '.' separator, no locale. Negative
/// zero prints as 0.000000.
std::string fixed6(double value);
/// Scientific notation with six mantissa decimals, e.g. 1.234560e-05.
std::string sci6(double value);

/// `node,score` rows in node-index order, i.e. edge-list appearance order.
void write_scores(std::ostream& out, const ScoreVector& scores, const NodeLabelMap& labels);

void write_correlations(std::ostream& out, const std::vector<CorrelationRecord>& records);

/// `metric,node,normalized_score`
void write_distribution_scores(std::ostream& out, const std::vector<NormalizedScore>& scores);

/// `metric_a,metric_b,mode,ruzicka`
void write_ruzicka(std::ostream& out, const std::vector<RuzickaRecord>& records);

/// `metric,n,median_runtime_seconds,loglog_slope`; runtimes in sci6 so
/// microsecond timings keep their significant digits.
void write_scaling(std::ostream& out, const std::vector<ScalingRecord>& records);

}  // namespace distcent::csv
