#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace distcent {

using Node = std::uint32_t;

/// Immutable, undirected, positively weighted simple graph in CSR form.
///
/// Node indices are contiguous in [0, node_count()). Each undirected edge is
/// stored twice, once in each endpoint's row, and rows are sorted by neighbor
/// index so every per-node reduction runs in a fixed order. Degrees,
/// strengths and the total weight are computed once at construction.
class Graph {
public:
    struct Edge {
        Node u;
        Node v;
        double weight = 1.0;
    };

    Graph() = default;

    /// Builds a graph on `node_count` nodes. Throws InvalidArgument on an
    /// out-of-range endpoint, a self-loop, a non-positive or non-finite
    /// weight, or a repeated unordered pair.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return degree_.size(); }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const Node> neighbors(Node j) const;
    std::span<const double> weights(Node j) const;

    std::size_t degree(Node j) const;
    double strength(Node j) const;
    /// Sum of w_jk^alpha over the neighbors k of j.
    double alpha_strength(Node j, double alpha) const;
    /// Sum of weights over distinct edges.
    double total_weight() const noexcept { return total_weight_; }

    const std::vector<std::size_t>& degrees() const noexcept { return degree_; }
    const std::vector<double>& strengths() const noexcept { return strength_; }
    std::vector<double> alpha_strengths(double alpha) const;

    /// Every edge once, as (u < v), ordered by (u, v).
    std::vector<Edge> edges() const;

    /// True when every edge weight is exactly 1.
    bool is_unweighted() const noexcept { return unweighted_; }

    /// 64-bit FNV-1a hash of the node count and the canonical edge list.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_ && a.weights_ == b.weights_;
    }

private:
    void check_node(Node j) const;

    std::vector<std::size_t> offsets_{0};
    std::vector<Node> neighbors_;
    std::vector<double> weights_;
    std::vector<std::size_t> degree_;
    std::vector<double> strength_;
    double total_weight_ = 0.0;
    bool unweighted_ = true;
    std::uint64_t fingerprint_ = 0;
};

}  // namespace distcent
