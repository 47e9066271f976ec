#include "distcent/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "distcent/error.hpp"

namespace distcent {

namespace {

class Fnv1a {
public:
    void add(std::uint64_t v) noexcept {
        for (int i = 0; i < 8; ++i) {
            hash_ ^= (v >> (8 * i)) & 0xffu;
            hash_ *= 0x100000001b3ULL;
        }
    }
    std::uint64_t value() const noexcept { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
    if (node_count > std::numeric_limits<Node>::max()) {
        throw InvalidArgument("node count " + std::to_string(node_count) + " exceeds index range");
    }
    std::vector<std::size_t> deg(node_count, 0);
    for (const Edge& e : edges) {
        if (e.u >= node_count || e.v >= node_count) {
            throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a node outside [0, " + std::to_string(node_count) + ")");
        }
        if (e.u == e.v) {
            throw InvalidArgument("self-loop on node " + std::to_string(e.u));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has non-positive or non-finite weight");
        }
        ++deg[e.u];
        ++deg[e.v];
    }

    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t j = 0; j < node_count; ++j) {
        g.offsets_[j + 1] = g.offsets_[j] + deg[j];
    }
    g.neighbors_.resize(g.offsets_.back());
    g.weights_.resize(g.offsets_.back());

    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        g.neighbors_[fill[e.u]] = e.v;
        g.weights_[fill[e.u]++] = e.weight;
        g.neighbors_[fill[e.v]] = e.u;
        g.weights_[fill[e.v]++] = e.weight;
    }

    // Sort each row by neighbor and reject repeated pairs.
    std::vector<std::size_t> perm;
    std::vector<Node> nbr_tmp;
    std::vector<double> w_tmp;
    for (std::size_t j = 0; j < node_count; ++j) {
        const std::size_t lo = g.offsets_[j];
        const std::size_t len = g.offsets_[j + 1] - lo;
        perm.resize(len);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return g.neighbors_[lo + a] < g.neighbors_[lo + b];
        });
        nbr_tmp.resize(len);
        w_tmp.resize(len);
        for (std::size_t k = 0; k < len; ++k) {
            nbr_tmp[k] = g.neighbors_[lo + perm[k]];
            w_tmp[k] = g.weights_[lo + perm[k]];
            if (k > 0 && nbr_tmp[k] == nbr_tmp[k - 1]) {
                throw InvalidArgument("duplicate edge between nodes " + std::to_string(std::min<std::size_t>(j, nbr_tmp[k])) +
                                      " and " + std::to_string(std::max<std::size_t>(j, nbr_tmp[k])));
            }
        }
        std::copy(nbr_tmp.begin(), nbr_tmp.end(), g.neighbors_.begin() + static_cast<std::ptrdiff_t>(lo));
        std::copy(w_tmp.begin(), w_tmp.end(), g.weights_.begin() + static_cast<std::ptrdiff_t>(lo));
    }

    g.degree_ = std::move(deg);
    g.strength_.assign(node_count, 0.0);
    for (std::size_t j = 0; j < node_count; ++j) {
        double s = 0.0;
        for (std::size_t k = g.offsets_[j]; k < g.offsets_[j + 1]; ++k) {
            s += g.weights_[k];
        }
        g.strength_[j] = s;
    }

    Fnv1a hash;
    hash.add(node_count);
    for (std::size_t j = 0; j < node_count; ++j) {
        for (std::size_t k = g.offsets_[j]; k < g.offsets_[j + 1]; ++k) {
            if (g.neighbors_[k] <= j) continue;
            g.total_weight_ += g.weights_[k];
            g.unweighted_ = g.unweighted_ && g.weights_[k] == 1.0;
            hash.add(j);
            hash.add(g.neighbors_[k]);
            hash.add(std::bit_cast<std::uint64_t>(g.weights_[k]));
        }
    }
    g.fingerprint_ = hash.value();
    return g;
}

void Graph::check_node(Node j) const {
    if (j >= node_count()) {
        throw std::out_of_range("node index " + std::to_string(j) + " out of range for graph with " +
                                std::to_string(node_count()) + " nodes");
    }
}

std::span<const Node> Graph::neighbors(Node j) const {
    check_node(j);
    return {neighbors_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
}

std::span<const double> Graph::weights(Node j) const {
    check_node(j);
    return {weights_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
}

std::size_t Graph::degree(Node j) const {
    check_node(j);
    return degree_[j];
}

double Graph::strength(Node j) const {
    check_node(j);
    return strength_[j];
}

double Graph::alpha_strength(Node j, double alpha) const {
    check_node(j);
    double s = 0.0;
    for (std::size_t k = offsets_[j]; k < offsets_[j + 1]; ++k) {
        s += std::pow(weights_[k], alpha);
    }
    return s;
}

std::vector<double> Graph::alpha_strengths(double alpha) const {
    std::vector<double> out(node_count(), 0.0);
    for (std::size_t j = 0; j < node_count(); ++j) {
        double s = 0.0;
        for (std::size_t k = offsets_[j]; k < offsets_[j + 1]; ++k) {
            s += std::pow(weights_[k], alpha);
        }
        out[j] = s;
    }
    return out;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t j = 0; j < node_count(); ++j) {
        for (std::size_t k = offsets_[j]; k < offsets_[j + 1]; ++k) {
            if (neighbors_[k] > j) {
                out.push_back({static_cast<Node>(j), neighbors_[k], weights_[k]});
            }
        }
    }
    return out;
}

}  // namespace distcent
