#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "distcent/graph.hpp"

namespace testgraphs {

using distcent::Graph;
using distcent::Node;

inline Graph make(std::size_t n, std::initializer_list<std::tuple<Node, Node, double>> edges) {
    std::vector<Graph::Edge> list;
    for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
    return Graph::from_edges(n, list);
}

inline Graph path3() { return make(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }
inline Graph triangle() { return make(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

/// K_{1,d} with center 0 and uniform weight w.
inline Graph star(std::size_t d, double w = 1.0) {
    std::vector<Graph::Edge> list;
    for (std::size_t k = 1; k <= d; ++k) list.push_back({0, static_cast<Node>(k), w});
    return Graph::from_edges(d + 1, list);
}

inline Graph complete(std::size_t n) {
    std::vector<Graph::Edge> list;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) list.push_back({static_cast<Node>(i), static_cast<Node>(j), 1.0});
    return Graph::from_edges(n, list);
}

}  // namespace testgraphs
