#include "distcent/randgen.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "distcent/error.hpp"
#include "distcent/rng.hpp"

namespace distcent {

namespace {

// Fenwick tree over nonnegative integer weights with sampling by prefix sum.
class WeightTree {
public:
    explicit WeightTree(std::size_t size) : tree_(size + 1, 0), values_(size, 0) {}

    void set(std::size_t i, std::uint64_t w) {
        const std::uint64_t old = values_[i];
        values_[i] = w;
        if (w >= old) {
            add(i, w - old, true);
        } else {
            add(i, old - w, false);
        }
    }
    std::uint64_t get(std::size_t i) const { return values_[i]; }
    std::uint64_t total() const { return total_; }

    /// Smallest index whose inclusive prefix sum exceeds r.
    std::size_t find(std::uint64_t r) const {
        std::size_t pos = 0;
        std::size_t step = 1;
        while (step * 2 < tree_.size()) step *= 2;
        for (; step > 0; step /= 2) {
            if (pos + step < tree_.size() && tree_[pos + step] <= r) {
                pos += step;
                r -= tree_[pos];
            }
        }
        return pos;
    }

private:
    void add(std::size_t i, std::uint64_t delta, bool up) {
        total_ = up ? total_ + delta : total_ - delta;
        for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) {
            tree_[k] = up ? tree_[k] + delta : tree_[k] - delta;
        }
    }

    std::vector<std::uint64_t> tree_;
    std::vector<std::uint64_t> values_;
    std::uint64_t total_ = 0;
};

}  // namespace

std::string_view topology_name(Topology t) noexcept {
    switch (t) {
        case Topology::ScaleFree: return "sf";
        case Topology::SmallWorld: return "sw";
        case Topology::ErdosRenyi: return "er";
    }
    return "unknown";
}

Topology parse_topology(std::string_view name) {
    if (name == "sf") return Topology::ScaleFree;
    if (name == "sw") return Topology::SmallWorld;
    if (name == "er") return Topology::ErdosRenyi;
    throw InvalidArgument("unknown topology '" + std::string(name) + "' (expected sf, sw or er)");
}

void validate(const GeneratorConfig& cfg) {
    if (cfg.n < 3) throw InvalidArgument("generator: n must be at least 3");
    if (cfg.m < 1) throw InvalidArgument("generator: m must be at least 1");
    if (cfg.nei < 1) throw InvalidArgument("generator: nei must be at least 1");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw InvalidArgument("generator: p must lie in [0, 1]");
}

Graph gen_scale_free(const GeneratorConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    WeightTree appeal(cfg.n);
    std::vector<std::size_t> degree(cfg.n, 0);
    std::vector<Graph::Edge> edges;
    edges.reserve(cfg.m * cfg.n);

    appeal.set(0, 1);
    std::vector<std::size_t> targets;
    for (std::size_t t = 1; t < cfg.n; ++t) {
        const std::size_t k = std::min(cfg.m, t);
        targets.clear();
        for (std::size_t draw = 0; draw < k; ++draw) {
            const std::size_t target = appeal.find(rng.uniform_below(appeal.total()));
            targets.push_back(target);
            appeal.set(target, 0);  // without replacement
        }
        for (std::size_t target : targets) {
            ++degree[target];
            appeal.set(target, degree[target] + 1);
            edges.push_back({static_cast<Node>(t), static_cast<Node>(target), 1.0});
        }
        degree[t] = k;
        appeal.set(t, k + 1);
    }
    return Graph::from_edges(cfg.n, edges);
}

Graph gen_small_world(const GeneratorConfig& cfg) {
    validate(cfg);
    if (cfg.n <= 2 * cfg.nei) {
        throw InvalidArgument("small-world: n must exceed 2 * nei");
    }
    Rng rng(cfg.seed);
    std::vector<std::set<Node>> adj(cfg.n);
    std::vector<Graph::Edge> edges;
    edges.reserve(cfg.n * cfg.nei);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        for (std::size_t k = 1; k <= cfg.nei; ++k) {
            const auto u = static_cast<Node>(i);
            const auto v = static_cast<Node>((i + k) % cfg.n);
            edges.push_back({u, v, 1.0});
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for (auto& e : edges) {
        if (!rng.bernoulli(cfg.p)) continue;
        if (adj[e.u].size() >= cfg.n - 1) continue;  // nowhere to go
        Node w = 0;
        do {
            w = static_cast<Node>(rng.uniform_below(cfg.n));
        } while (w == e.u || adj[e.u].contains(w));
        adj[e.u].erase(e.v);
        adj[e.v].erase(e.u);
        adj[e.u].insert(w);
        adj[w].insert(e.u);
        e.v = w;
    }
    return Graph::from_edges(cfg.n, edges);
}

Graph gen_erdos_renyi(const GeneratorConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < cfg.n; ++i) {
        for (std::size_t j = i + 1; j < cfg.n; ++j) {
            if (rng.bernoulli(cfg.p)) edges.push_back({static_cast<Node>(i), static_cast<Node>(j), 1.0});
        }
    }
    return Graph::from_edges(cfg.n, edges);
}

Graph generate(const GeneratorConfig& cfg) {
    switch (cfg.family) {
        case Topology::ScaleFree: return gen_scale_free(cfg);
        case Topology::SmallWorld: return gen_small_world(cfg);
        case Topology::ErdosRenyi: return gen_erdos_renyi(cfg);
    }
    throw InvalidArgument("generate: unhandled topology");
}

Graph assign_weights(const Graph& g, const WeightConfig& wcfg, std::uint64_t seed) {
    auto edges = g.edges();
    if (wcfg.weighted) {
        if (wcfg.low < 1 || wcfg.low > wcfg.high) {
            throw InvalidArgument("weights: need 1 <= low <= high, got [" + std::to_string(wcfg.low) + ", " +
                                  std::to_string(wcfg.high) + "]");
        }
        Rng rng(seed);
        for (auto& e : edges) e.weight = static_cast<double>(rng.uniform_int(wcfg.low, wcfg.high));
    } else {
        for (auto& e : edges) e.weight = 1.0;
    }
    return Graph::from_edges(g.node_count(), edges);
}

}  // namespace distcent
