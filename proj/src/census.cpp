#include "edgestat/census.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace edgestat {

const std::array<Shape, shape_count>& all_shapes() {
    static const std::array<Shape, shape_count> shapes = {
        Shape::K2,      Shape::K1_2,    Shape::K3,      Shape::P4,     Shape::K1_3,
        Shape::C4,      Shape::Paw,     Shape::K1_4,    Shape::Spider, Shape::P5,
        Shape::TwoK2,   Shape::ThreeK2, Shape::FourK2,  Shape::K2_K1_2, Shape::TwoK1_2,
        Shape::K2_K1_3, Shape::K2_P4,   Shape::K2_K3,   Shape::TwoK2_K1_2};
    return shapes;
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::K2: return "K2";
        case Shape::K1_2: return "K1,2";
        case Shape::K3: return "K3";
        case Shape::P4: return "P4";
        case Shape::K1_3: return "K1,3";
        case Shape::C4: return "C4";
        case Shape::Paw: return "K3+";
        case Shape::K1_4: return "K1,4";
        case Shape::Spider: return "K1,3+";
        case Shape::P5: return "P5";
        case Shape::TwoK2: return "2K2";
        case Shape::ThreeK2: return "3K2";
        case Shape::FourK2: return "4K2";
        case Shape::K2_K1_2: return "K2+K1,2";
        case Shape::TwoK1_2: return "2K1,2";
        case Shape::K2_K1_3: return "K2+K1,3";
        case Shape::K2_P4: return "K2+P4";
        case Shape::K2_K3: return "K2+K3";
        case Shape::TwoK2_K1_2: return "2K2+K1,2";
    }
    throw std::logic_error("unknown shape");
}

const std::vector<std::pair<int, int>>& shape_edges(Shape s) {
    using E = std::vector<std::pair<int, int>>;
    static const std::map<Shape, E> edges = {
        {Shape::K2, E{{0, 1}}},
        {Shape::K1_2, E{{0, 1}, {0, 2}}},
        {Shape::K3, E{{0, 1}, {0, 2}, {1, 2}}},
        {Shape::P4, E{{0, 1}, {1, 2}, {2, 3}}},
        {Shape::K1_3, E{{0, 1}, {0, 2}, {0, 3}}},
        {Shape::C4, E{{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
        {Shape::Paw, E{{0, 1}, {0, 2}, {1, 2}, {0, 3}}},
        {Shape::K1_4, E{{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
        {Shape::Spider, E{{0, 1}, {0, 2}, {0, 3}, {3, 4}}},
        {Shape::P5, E{{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
        {Shape::TwoK2, E{{0, 1}, {2, 3}}},
        {Shape::ThreeK2, E{{0, 1}, {2, 3}, {4, 5}}},
        {Shape::FourK2, E{{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
        {Shape::K2_K1_2, E{{0, 1}, {2, 3}, {2, 4}}},
        {Shape::TwoK1_2, E{{0, 1}, {0, 2}, {3, 4}, {3, 5}}},
        {Shape::K2_K1_3, E{{0, 1}, {2, 3}, {2, 4}, {2, 5}}},
        {Shape::K2_P4, E{{0, 1}, {2, 3}, {3, 4}, {4, 5}}},
        {Shape::K2_K3, E{{0, 1}, {2, 3}, {2, 4}, {3, 4}}},
        {Shape::TwoK2_K1_2, E{{0, 1}, {2, 3}, {4, 5}, {4, 6}}},
    };
    return edges.at(s);
}

int shape_edge_count(Shape s) { return static_cast<int>(shape_edges(s).size()); }

int shape_vertex_count(Shape s) {
    int v = 0;
    for (auto [a, b] : shape_edges(s)) v = std::max({v, a + 1, b + 1});
    return v;
}

namespace {

// Common-neighbor counts for all pairs, one triangular table.
class CodegTable {
public:
    explicit CodegTable(const Graph& g) : n_(g.vertex_count()), table_(size_t(n_) * n_, 0) {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                const uint16_t c = static_cast<uint16_t>(g.common_neighbors(u, v));
                table_[size_t(u) * n_ + v] = c;
                table_[size_t(v) * n_ + u] = c;
            }
        }
    }
    int operator()(int u, int v) const { return table_[size_t(u) * n_ + v]; }

private:
    int n_;
    std::vector<uint16_t> table_;
};

int64_t choose2(int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
int64_t choose3(int64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }
int64_t choose4(int64_t x) { return x < 4 ? 0 : x * (x - 1) * (x - 2) * (x - 3) / 24; }

}  // namespace

SubgraphCensus census(const Graph& g) {
    const int n = g.vertex_count();
    const int64_t m = g.edge_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);

    CodegTable codeg(g);

    int64_t cherries = 0, stars3 = 0, stars4 = 0;
    for (int v = 0; v < n; ++v) {
        cherries += choose2(deg[v]);
        stars3 += choose3(deg[v]);
        stars4 += choose4(deg[v]);
    }

    // Triangles once via the smallest vertex; paw needs each triangle's
    // degree sum, so enumerate members explicitly.
    int64_t triangles = 0, paw = 0;
    for (auto [u, v] : edges) {
        auto ru = g.row(u);
        auto rv = g.row(v);
        for (size_t w = 0; w < ru.size(); ++w) {
            uint64_t both = ru[w] & rv[w];
            while (both) {
                const int x = static_cast<int>(w * 64) + std::countr_zero(both);
                both &= both - 1;
                if (x <= v) continue;  // count each triangle at its lowest edge
                ++triangles;
                paw += deg[u] + deg[v] + deg[x] - 6;
            }
        }
    }

    int64_t p4 = 0;
    for (auto [u, v] : edges) p4 += int64_t(deg[u] - 1) * (deg[v] - 1);
    p4 -= 3 * triangles;

    int64_t c4_twice = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) c4_twice += choose2(codeg(u, v));
    const int64_t c4 = c4_twice / 2;

    // Spider: root an ordered edge (c, x), pick 2 more neighbors of c and an
    // extension of x; configurations collapsing to 4 vertices are paws, each
    // arising twice.
    int64_t spider = 0;
    for (auto [u, v] : edges) {
        spider += choose2(deg[u] - 1) * (deg[v] - 1);
        spider += choose2(deg[v] - 1) * (deg[u] - 1);
    }
    spider -= 2 * paw;

    // P5 copies a-b-c-d-e identified by the middle vertex c and the neighbor
    // pair {b,d}: the arm counts exclude c/d/b collisions, the codeg term
    // removes a = e.
    int64_t p5 = 0;
    for (int c = 0; c < n; ++c) {
        std::vector<int> nbrs;
        auto rc = g.row(c);
        for (size_t w = 0; w < rc.size(); ++w) {
            uint64_t bits = rc[w];
            while (bits) {
                nbrs.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                const int b = nbrs[i], d = nbrs[j];
                const int adj = g.adjacent(b, d) ? 1 : 0;
                p5 += int64_t(deg[b] - 1 - adj) * (deg[d] - 1 - adj) - (codeg(b, d) - 1);
            }
        }
    }

    SubgraphCensus cs;
    cs[Shape::K2] = m;
    cs[Shape::K1_2] = cherries;
    cs[Shape::K3] = triangles;
    cs[Shape::P4] = p4;
    cs[Shape::K1_3] = stars3;
    cs[Shape::C4] = c4;
    cs[Shape::Paw] = paw;
    cs[Shape::K1_4] = stars4;
    cs[Shape::Spider] = spider;
    cs[Shape::P5] = p5;

    // Disconnected shapes by inclusion-exclusion over the classified overlap
    // configurations.
    const Int mZ = m;
    cs[Shape::TwoK2] = binomial(mZ, 2) - cherries;
    cs[Shape::K2_K1_2] = Int(cherries) * (mZ - 2) - 3 * stars3 - 2 * p4 - 3 * triangles;
    cs[Shape::K2_K3] = Int(triangles) * (mZ - 3) - paw;
    cs[Shape::K2_K1_3] = Int(stars3) * (mZ - 3) - 4 * stars4 - spider - paw;
    cs[Shape::K2_P4] = Int(p4) * (mZ - 3) - 4 * c4 - 2 * paw - 2 * p5 - 2 * spider;
    cs[Shape::TwoK1_2] = binomial(Int(cherries), 2) - 3 * triangles - p4 - 3 * stars3 -
                         2 * c4 - 2 * paw - 3 * stars4 - spider - p5;
    cs[Shape::ThreeK2] =
        binomial(mZ, 3) - cs[Shape::K2_K1_2] - p4 - stars3 - triangles;
    // Sum of intersecting edge-pairs over all 4-subsets classifies the
    // remaining two unknowns.
    cs[Shape::TwoK2_K1_2] = Int(cherries) * binomial(mZ - 2, 2) -
                            (2 * cs[Shape::TwoK1_2] + 3 * cs[Shape::K2_K1_3] +
                             2 * cs[Shape::K2_P4] + 3 * cs[Shape::K2_K3] + Int(4) * c4 +
                             Int(5) * paw + Int(6) * stars4 + Int(4) * spider + Int(3) * p5);
    cs[Shape::FourK2] = binomial(mZ, 4) - cs[Shape::TwoK2_K1_2] - cs[Shape::TwoK1_2] -
                        cs[Shape::K2_K1_3] - cs[Shape::K2_P4] - cs[Shape::K2_K3] - c4 - paw -
                        stars4 - spider - p5;
    return cs;
}

}  // namespace edgestat
