#include "edgestat/graph.hpp"

#include <bit>
#include <stdexcept>

#include "edgestat/rng.hpp"

namespace edgestat {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1 || n > max_vertices)
        throw std::invalid_argument("vertex count must be in [1, " +
                                    std::to_string(max_vertices) + "], got " + std::to_string(n));
    row_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (!adjacent(u, v)) ++m_;
    row_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    row_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    if (adjacent(u, v)) --m_;
    row_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t(1) << (v & 63));
    row_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t(1) << (u & 63));
}

void Graph::toggle_edge(int u, int v) {
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

int Graph::degree(int v) const {
    const uint64_t* r = row_.data() + static_cast<size_t>(v) * words_;
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::degree_into(int v, std::span<const uint64_t> mask) const {
    const uint64_t* r = row_.data() + static_cast<size_t>(v) * words_;
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w] & mask[w]);
    return d;
}

int Graph::common_neighbors(int u, int v) const {
    const uint64_t* ru = row_.data() + static_cast<size_t>(u) * words_;
    const uint64_t* rv = row_.data() + static_cast<size_t>(v) * words_;
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph Graph::without_vertex(int v) const {
    if (n_ == 1) throw std::invalid_argument("cannot delete the only vertex");
    Graph h(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        const int mu = u < v ? u : u - 1;
        for (int w = u + 1; w < n_; ++w) {
            if (w == v || !adjacent(u, w)) continue;
            const int mw = w < v ? w : w - 1;
            h.add_edge(mu, mw);
        }
    }
    return h;
}

Graph Graph::with_twin_of(int v) const {
    Graph h(n_ + 1);
    for (int u = 0; u < n_; ++u)
        for (int w = u + 1; w < n_; ++w)
            if (adjacent(u, w)) h.add_edge(u, w);
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) h.add_edge(n_, u);
    return h;
}

Graph clique_union(int n, int parts) {
    if (parts < 1 || parts > n)
        throw std::invalid_argument("clique_union: need 1 <= parts <= n");
    Graph g(n);
    // Sizes as equal as possible: the first (n mod parts) cliques get one
    // extra vertex.
    int start = 0;
    const int base = n / parts, extra = n % parts;
    for (int c = 0; c < parts; ++c) {
        const int size = base + (c < extra ? 1 : 0);
        for (int u = start; u < start + size; ++u)
            for (int v = u + 1; v < start + size; ++v) g.add_edge(u, v);
        start += size;
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: part sizes must be positive");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph two_cliques(int n) { return clique_union(n, 2); }

Graph gnp(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0, 1]");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

Graph perfect_matching(int n) {
    if (n % 2 != 0) throw std::invalid_argument("perfect_matching: n must be even");
    Graph g(n);
    for (int u = 0; u < n; u += 2) g.add_edge(u, u + 1);
    return g;
}

int64_t symm_diff_sum(const Graph& g) {
    const int n = g.vertex_count();
    int64_t total = 0;
    for (int u = 0; u < n; ++u) {
        auto ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            auto rv = g.row(v);
            int d = 0;
            for (size_t w = 0; w < ru.size(); ++w) d += std::popcount(ru[w] ^ rv[w]);
            total += d;
        }
    }
    return total;
}

}  // namespace edgestat
