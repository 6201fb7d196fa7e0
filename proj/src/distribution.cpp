#include "edgestat/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "edgestat/combinations.hpp"

namespace edgestat {

Int EdgeDistribution::max_ell() const { return binomial(static_cast<unsigned long>(k), 2); }

const Int& EdgeDistribution::count_at(long l) const {
    static const Int zero = 0;
    if (l < 0 || Int(l) > max_ell()) throw std::out_of_range("edge count out of [0, C(k,2)]");
    if (l >= static_cast<long>(counts.size())) return zero;
    return counts[static_cast<size_t>(l)];
}

Rat EdgeDistribution::probability_at(long l) const { return make_rat(count_at(l), total); }

Rat EdgeDistribution::mean() const {
    Int acc = 0;
    for (size_t l = 0; l < counts.size(); ++l) acc += Int(static_cast<long>(l)) * counts[l];
    return make_rat(acc, total);
}

namespace {

struct SubsetState {
    std::vector<uint64_t> mask;
    long edges = 0;

    SubsetState(const Graph& g, std::span<const int> combo) : mask(g.words_per_row(), 0) {
        for (int v : combo) mask[v >> 6] |= uint64_t(1) << (v & 63);
        for (int v : combo) edges += g.degree_into(v, mask);
        edges /= 2;
    }

    void swap(const Graph& g, int in, int out) {
        mask[out >> 6] &= ~(uint64_t(1) << (out & 63));
        edges -= g.degree_into(out, mask);
        edges += g.degree_into(in, mask);
        mask[in >> 6] |= uint64_t(1) << (in & 63);
    }
};

// Enumerates `count` subsets starting from `start` in revolving-door order,
// histogramming the running edge count.
std::vector<uint64_t> run_chunk(const Graph& g, int k, std::vector<int> start, uint64_t count,
                                size_t hist_size) {
    std::vector<uint64_t> hist(hist_size, 0);
    RevolvingDoor door(g.vertex_count(), k, start);
    SubsetState state(g, door.current());
    ++hist[static_cast<size_t>(state.edges)];
    int in = 0, out = 0;
    for (uint64_t i = 1; i < count; ++i) {
        if (!door.step(in, out)) break;
        state.swap(g, in, out);
        ++hist[static_cast<size_t>(state.edges)];
    }
    return hist;
}

}  // namespace

EdgeDistribution exact_distribution(const Graph& g, int k, const ExactOptions& opt) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("exact_distribution: need 1 <= k <= n");
    Int total = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (total > opt.budget) throw BudgetExceeded(total, opt.budget);
    const uint64_t count = total.get_ui();

    const Int lmax_z = std::min(binomial(static_cast<unsigned long>(k), 2),
                                Int(static_cast<long>(g.edge_count())));
    const size_t hist_size = lmax_z.get_ui() + 1;

    unsigned threads = std::max(1u, opt.threads);
    if (count < 1u << 16) threads = 1;
    std::vector<uint64_t> hist;
    if (threads == 1) {
        hist = run_chunk(g, k, unrank_revolving_door(n, k, 0), count, hist_size);
    } else {
        std::vector<std::future<std::vector<uint64_t>>> parts;
        const uint64_t chunk = (count + threads - 1) / threads;
        for (uint64_t start = 0; start < count; start += chunk) {
            const uint64_t len = std::min(chunk, count - start);
            parts.push_back(std::async(std::launch::async, [&g, k, n, start, len, hist_size] {
                return run_chunk(g, k, unrank_revolving_door(n, k, start), len, hist_size);
            }));
        }
        hist.assign(hist_size, 0);
        for (auto& f : parts) {
            auto part = f.get();
            for (size_t i = 0; i < hist_size; ++i) hist[i] += part[i];
        }
    }

    EdgeDistribution d;
    d.n = n;
    d.k = k;
    d.total = std::move(total);
    d.counts.reserve(hist_size);
    for (uint64_t c : hist) d.counts.emplace_back(static_cast<unsigned long>(c));
    while (!d.counts.empty() && d.counts.back() == 0) d.counts.pop_back();
    return d;
}

double McEstimate::estimate_at(long l) const {
    if (l < 0) throw std::out_of_range("negative edge count");
    if (l >= static_cast<long>(hits.size())) return 0.0;
    return static_cast<double>(hits[static_cast<size_t>(l)]) / static_cast<double>(samples);
}

double McEstimate::stderr_at(long l) const {
    const double p = estimate_at(l);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

namespace {

constexpr uint64_t mc_block = 1 << 16;

// One deterministic block of samples: a partial Fisher-Yates draw of k
// vertices per sample, undone afterwards so the pool persists.
std::vector<uint64_t> mc_run_block(const Graph& g, int k, uint64_t seed, uint64_t block_id,
                                   uint64_t nsamples, size_t hist_size) {
    const int n = g.vertex_count();
    Rng rng = Rng::substream(seed, block_id);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> picked(k);
    std::vector<uint64_t> hist(hist_size, 0);
    for (uint64_t s = 0; s < nsamples; ++s) {
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
            picked[i] = j;
        }
        long edges = 0;
        for (int i = 1; i < k; ++i)
            for (int j = 0; j < i; ++j)
                if (g.adjacent(pool[i], pool[j])) ++edges;
        ++hist[static_cast<size_t>(edges)];
        for (int i = k - 1; i >= 0; --i) std::swap(pool[i], pool[picked[i]]);
    }
    return hist;
}

}  // namespace

McEstimate mc_distribution(const Graph& g, int k, uint64_t samples, uint64_t seed,
                           unsigned threads) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("mc_distribution: need 1 <= k <= n");
    if (samples < 1) throw std::invalid_argument("mc_distribution: need samples >= 1");

    const Int lmax_z = std::min(binomial(static_cast<unsigned long>(k), 2),
                                Int(static_cast<long>(g.edge_count())));
    const size_t hist_size = lmax_z.get_ui() + 1;
    const uint64_t nblocks = (samples + mc_block - 1) / mc_block;

    McEstimate est;
    est.n = n;
    est.k = k;
    est.samples = samples;
    est.seed = seed;
    est.hits.assign(hist_size, 0);

    threads = std::max(1u, threads);
    if (threads == 1 || nblocks == 1) {
        for (uint64_t b = 0; b < nblocks; ++b) {
            const uint64_t len = std::min(mc_block, samples - b * mc_block);
            auto hist = mc_run_block(g, k, seed, b, len, hist_size);
            for (size_t i = 0; i < hist_size; ++i) est.hits[i] += hist[i];
        }
    } else {
        // Blocks are seeded independently, so any worker may take any block;
        // summing the per-worker histograms is order-insensitive.
        std::atomic<uint64_t> next{0};
        std::vector<std::vector<uint64_t>> worker_hists(threads,
                                                        std::vector<uint64_t>(hist_size, 0));
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (;;) {
                    const uint64_t b = next.fetch_add(1);
                    if (b >= nblocks) return;
                    const uint64_t len = std::min(mc_block, samples - b * mc_block);
                    auto hist = mc_run_block(g, k, seed, b, len, hist_size);
                    for (size_t i = 0; i < hist_size; ++i) worker_hists[t][i] += hist[i];
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& wh : worker_hists)
            for (size_t i = 0; i < hist_size; ++i) est.hits[i] += wh[i];
    }
    return est;
}

}  // namespace edgestat
