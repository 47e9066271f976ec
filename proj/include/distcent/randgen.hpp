#pragma once

#include <cstdint>
#include <string_view>

#include "distcent/graph.hpp"

namespace distcent {

enum class Topology { ScaleFree, SmallWorld, ErdosRenyi };

std::string_view topology_name(Topology t) noexcept;  // "sf", "sw", "er"
Topology parse_topology(std::string_view name);

struct GeneratorConfig {
    Topology family = Topology::ScaleFree;
    std::size_t n = 1000;
    /// Edges added per new node (ScaleFree).
    std::size_t m = 2;
    /// Lattice neighbors on each side (SmallWorld).
    std::size_t nei = 2;
    /// Rewiring probability (SmallWorld) or edge probability (ErdosRenyi).
    double p = 0.05;
    std::uint64_t seed = 0;
};

struct WeightConfig {
    bool weighted = false;
    std::int64_t low = 1;
    std::int64_t high = 20;
};

/// Throws InvalidArgument unless n >= 3, m >= 1, nei >= 1 and 0 <= p <= 1.
void validate(const GeneratorConfig& cfg);

/// Preferential attachment grown from a single node. Node t attaches to
/// min(m, t) distinct earlier nodes sampled without replacement with
/// probability proportional to degree + 1.
Graph gen_scale_free(const GeneratorConfig& cfg);

/// Ring lattice with nei neighbors per side, then each lattice edge in
/// creation order is rewired with probability p: its first endpoint is
/// kept and the other is redrawn uniformly until it is neither a self-loop
/// nor an existing neighbor. The edge count stays exactly n * nei.
Graph gen_small_world(const GeneratorConfig& cfg);

/// G(n, p): every unordered pair independently, in lexicographic order.
Graph gen_erdos_renyi(const GeneratorConfig& cfg);

/// Dispatches on cfg.family.
Graph generate(const GeneratorConfig& cfg);

/// Returns a copy of g whose edges (in canonical order) carry independent
/// uniform integer weights in [low, high], or weight 1 when unweighted.
Graph assign_weights(const Graph& g, const WeightConfig& wcfg, std::uint64_t seed);

}  // namespace distcent
