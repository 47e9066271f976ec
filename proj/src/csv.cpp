#include "distcent/csv.hpp"

#include <charconv>
#include <string_view>

namespace distcent::csv {

namespace {

std::string format(double value, std::chars_format fmt) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, fmt, 6);
    std::string s(buf, ptr);
    if (s.front() == '-' && s.find_first_not_of("-0.e+", 0) == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

}  // namespace

std::string fixed6(double value) { return format(value, std::chars_format::fixed); }

std::string sci6(double value) { return format(value, std::chars_format::scientific); }

void write_scores(std::ostream& out, const ScoreVector& scores, const NodeLabelMap& labels) {
    out << "node,score\n";
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out << labels.label(static_cast<Node>(i)) << ',' << fixed6(scores[i]) << '\n';
    }
}

void write_correlations(std::ostream& out, const std::vector<CorrelationRecord>& records) {
    out << "topology,weighted,alpha,metric_a,metric_b,mean_spearman,sd_spearman,reps_used,reps_skipped\n";
    for (const auto& r : records) {
        out << topology_name(r.topology) << ',' << (r.weighted ? "true" : "false") << ',' << fixed6(r.alpha) << ','
            << r.metric_a << ',' << r.metric_b << ',' << fixed6(r.mean_spearman) << ',' << fixed6(r.sd_spearman)
            << ',' << r.reps_used << ',' << r.reps_skipped << '\n';
    }
}

void write_distribution_scores(std::ostream& out, const std::vector<NormalizedScore>& scores) {
    out << "metric,node,normalized_score\n";
    for (const auto& s : scores) {
        out << s.metric << ',' << s.node << ',' << fixed6(s.value) << '\n';
    }
}

void write_ruzicka(std::ostream& out, const std::vector<RuzickaRecord>& records) {
    out << "metric_a,metric_b,mode,ruzicka\n";
    for (const auto& r : records) {
        out << r.metric_a << ',' << r.metric_b << ',' << ruzicka_mode_name(r.mode) << ',' << fixed6(r.ruzicka)
            << '\n';
    }
}

void write_scaling(std::ostream& out, const std::vector<ScalingRecord>& records) {
    out << "metric,n,median_runtime_seconds,loglog_slope\n";
    for (const auto& r : records) {
        out << r.metric << ',' << r.n << ',' << sci6(r.median_runtime_seconds) << ',' << fixed6(r.loglog_slope)
            << '\n';
    }
}

}  // namespace distcent::csv
