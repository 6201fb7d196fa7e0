#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgestat {

/// Simple undirected graph on vertices 0..n-1, adjacency held as n rows of
/// n bits packed into 64-bit words. Rows stay symmetric and loop-free by
/// construction; neighborhood intersections and degrees are word-wise
/// popcount scans.
class Graph {
public:
    static constexpr int max_vertices = 4096;

    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const {
        return (row_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    int degree(int v) const;

    std::span<const uint64_t> row(int v) const {
        return {row_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }

    /// Number of neighbors of v inside the vertex set given as a bit mask
    /// (mask has words_per_row() words).
    int degree_into(int v, std::span<const uint64_t> mask) const;

    int common_neighbors(int u, int v) const;

    Graph complement() const;
    Graph without_vertex(int v) const;

    /// Appends a non-adjacent twin of vertex v: the new vertex has exactly
    /// N(v) as its neighborhood and is not adjacent to v.
    Graph with_twin_of(int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    int words_;
    int m_ = 0;
    std::vector<uint64_t> row_;
};

// Construction generators.
Graph clique_union(int n, int parts);
Graph complete_bipartite(int a, int b);
Graph two_cliques(int n);
Graph gnp(int n, double p, uint64_t seed);
Graph perfect_matching(int n);

/// Sum over unordered vertex pairs {u,v} of |N(u) symmetric-difference N(v)|
/// (u and v themselves count when the pair is an edge).
int64_t symm_diff_sum(const Graph& g);

// graph6 (de facto standard): size bytes 63+n for n <= 62, '~' + 3 bytes
// otherwise; upper-triangle bits x(0,1), x(0,2), x(1,2), ... packed
// big-endian into 6-bit groups, each + 63, zero-padded.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace edgestat
