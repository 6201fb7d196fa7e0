#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgestat/graph.hpp"
#include "edgestat/rational.hpp"

namespace edgestat {

/// Raised when an exact enumeration would exceed the subset budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Int required, uint64_t budget)
        : std::runtime_error("exact enumeration needs " + required.get_str() +
                             " subsets, over the budget of " + std::to_string(budget)),
          required_(std::move(required)) {}
    const Int& required() const { return required_; }

private:
    Int required_;
};

constexpr uint64_t default_subset_budget = 100'000'000;

/// Law of the number of edges induced by a uniform k-subset: exact integer
/// counts of k-subsets by induced edge count.
struct EdgeDistribution {
    int n = 0;
    int k = 0;
    Int total;                // C(n, k)
    std::vector<Int> counts;  // counts[l]; trailing zero counts are trimmed

    Int max_ell() const;  // C(k, 2)

    const Int& count_at(long l) const;
    Rat probability_at(long l) const;

    /// Mean as an exact rational.
    Rat mean() const;
};

struct ExactOptions {
    uint64_t budget = default_subset_budget;
    unsigned threads = 1;  // subset ranks are chunked; the result never depends on this
};

EdgeDistribution exact_distribution(const Graph& g, int k, const ExactOptions& opt = {});

/// Monte Carlo estimate of the same law.
struct McEstimate {
    int n = 0;
    int k = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::vector<uint64_t> hits;  // hits[l]

    double estimate_at(long l) const;
    double stderr_at(long l) const;
};

McEstimate mc_distribution(const Graph& g, int k, uint64_t samples, uint64_t seed,
                           unsigned threads = 1);

}  // namespace edgestat
