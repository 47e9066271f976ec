#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "distcent/graph.hpp"

namespace distcent {

/// Bijection between external text labels and contiguous node indices.
/// Indices are handed out in first-appearance order.
class NodeLabelMap {
public:
    /// Returns the index for `label`, assigning the next free index if unseen.
    Node intern(std::string_view label);

    std::optional<Node> find(std::string_view label) const;
    const std::string& label(Node index) const { return labels_.at(index); }
    std::size_t size() const noexcept { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Node> index_;
};

struct LabeledGraph {
    Graph graph;
    NodeLabelMap labels;
};

/// Parses a whitespace-separated edge list.
///
/// Lines are `u v` or `u v w`; blank lines and lines whose first
/// non-blank character is `#` are skipped. With `weighted` set the third
/// column is required; otherwise every weight is 1 (a third column, if
/// present, is still validated). Throws ParseError naming the line for
/// malformed lines, non-positive weights, self-loops and repeated pairs.
LabeledGraph read_edge_list(std::istream& in, bool weighted);

/// Writes every edge once in canonical order as `u v w`, using labels and
/// shortest round-trip weight formatting.
void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelMap& labels);

}  // namespace distcent
