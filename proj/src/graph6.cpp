#include <stdexcept>
#include <string>

#include "edgestat/graph.hpp"

namespace edgestat {

namespace {

[[noreturn]] void bad(const std::string& why) {
    throw std::invalid_argument("graph6: " + why);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    auto need = [&](size_t count) {
        if (text.size() - pos < count) bad("truncated input");
    };
    auto take = [&]() -> int {
        need(1);
        const unsigned char c = text[pos++];
        if (c < 63 || c > 126) bad("byte out of range [63,126] at offset " + std::to_string(pos - 1));
        return c - 63;
    };

    long n;
    need(1);
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = take();
    } else {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;  // '~~' + 6 bytes, n up to 2^36 - 1
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | take();
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i) n = (n << 6) | take();
        }
    }
    if (n < 1) bad("vertex count must be at least 1");
    if (n > Graph::max_vertices)
        bad("vertex count " + std::to_string(n) + " exceeds the supported maximum " +
            std::to_string(Graph::max_vertices));

    Graph g(static_cast<int>(n));
    const long total_bits = n * (n - 1) / 2;
    int group = 0, bits_left = 0;
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (bits_left == 0) {
                group = take();
                bits_left = 6;
            }
            if ((group >> (bits_left - 1)) & 1) g.add_edge(u, v);
            --bits_left;
        }
    }
    (void)total_bits;
    if (bits_left > 0 && (group & ((1 << bits_left) - 1)) != 0) bad("nonzero padding bits");
    if (pos != text.size()) bad("trailing characters after payload");
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int group = 0, bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (group << (6 - bits))));
    return out;
}

}  // namespace edgestat
