#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "edgestat/graph.hpp"
#include "edgestat/rational.hpp"

namespace edgestat {

/// Every union shape of up to four edges: the connected ones counted
/// directly, the disconnected ones derived by inclusion-exclusion.
enum class Shape {
    K2,         // single edge
    K1_2,       // cherry
    K3,         // triangle
    P4,         // path, 3 edges
    K1_3,       // 3-star
    C4,         // 4-cycle
    Paw,        // triangle + pendant edge (K3+)
    K1_4,       // 4-star
    Spider,     // 3-star with one edge subdivided (K1,3+)
    P5,         // path, 4 edges
    TwoK2,      // 2 disjoint edges
    ThreeK2,    // 3-matching
    FourK2,     // 4-matching
    K2_K1_2,    // edge + disjoint cherry
    TwoK1_2,    // two disjoint cherries
    K2_K1_3,    // edge + disjoint 3-star
    K2_P4,      // edge + disjoint path
    K2_K3,      // edge + disjoint triangle
    TwoK2_K1_2  // 2-matching + disjoint cherry
};

constexpr int shape_count = 19;

const std::array<Shape, shape_count>& all_shapes();
std::string shape_name(Shape s);

/// Reference edge list of the shape on vertices 0..vertices-1.
const std::vector<std::pair<int, int>>& shape_edges(Shape s);
int shape_edge_count(Shape s);
int shape_vertex_count(Shape s);

/// Exact counts of unlabeled, not-necessarily-induced subgraph copies.
struct SubgraphCensus {
    std::array<Int, shape_count> counts{};

    Int& operator[](Shape s) { return counts[static_cast<size_t>(s)]; }
    const Int& operator[](Shape s) const { return counts[static_cast<size_t>(s)]; }
};

SubgraphCensus census(const Graph& g);

}  // namespace edgestat
