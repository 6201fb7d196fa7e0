#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgestat/rational.hpp"

namespace edgestat {

/// Revolving-door Gray code over k-subsets of {0..n-1} (Knuth 7.2.1.3,
/// Algorithm R): every transition swaps exactly one element out and one in.
/// State is the combination c_1 < c_2 < ... < c_k alone, so an enumeration
/// can be resumed from any combination (see unrank_revolving_door).
class RevolvingDoor {
public:
    RevolvingDoor(int n, int k) : n_(n), k_(k) {
        if (k < 0 || k > n) throw std::invalid_argument("RevolvingDoor: need 0 <= k <= n");
        c_.assign(static_cast<size_t>(k_) + 3, 0);
        for (int j = 1; j <= k_; ++j) c_[j] = j - 1;
        c_[k_ + 1] = n_;
        c_[k_ + 2] = 0;
    }

    RevolvingDoor(int n, int k, std::span<const int> start) : RevolvingDoor(n, k) {
        for (int j = 1; j <= k_; ++j) c_[j] = start[j - 1];
        if (k_ == 1) pos_ = start[0];
    }

    std::span<const int> current() const { return {c_.data() + 1, static_cast<size_t>(k_)}; }

    /// Advance to the next combination; reports the swapped pair.
    /// Returns false (and changes nothing) once the sequence is exhausted.
    bool step(int& in, int& out) {
        if (k_ == 0 || k_ == n_) return false;
        if (k_ == 1) {
            if (pos_ + 1 >= n_) return false;
            out = c_[1];
            in = ++c_[1];
            ++pos_;
            return true;
        }
        if (k_ % 2 == 1) {
            if (c_[1] + 1 < c_[2]) {
                out = c_[1];
                in = ++c_[1];
                return true;
            }
            return cascade_decrease(2, in, out);
        }
        if (c_[1] > 0) {
            out = c_[1];
            in = --c_[1];
            return true;
        }
        return cascade_increase(2, in, out);
    }

private:
    // Try to decrease c_j, alternating with increase attempts up the levels.
    bool cascade_decrease(int j, int& in, int& out) {
        for (;;) {
            if (c_[j] >= j) {
                out = c_[j];
                c_[j] = c_[j - 1];
                c_[j - 1] = j - 2;
                in = j - 2;
                return true;
            }
            ++j;
            if (c_[j] + 1 < c_[j + 1]) {
                out = c_[j - 1];
                c_[j - 1] = c_[j];
                in = ++c_[j];
                return true;
            }
            if (++j > k_) return false;
        }
    }

    bool cascade_increase(int j, int& in, int& out) {
        for (;;) {
            if (c_[j] + 1 < c_[j + 1]) {
                out = c_[j - 1];
                c_[j - 1] = c_[j];
                in = ++c_[j];
                return true;
            }
            if (++j > k_) return false;
            if (c_[j] >= j) {
                out = c_[j];
                c_[j] = c_[j - 1];
                c_[j - 1] = j - 2;
                in = j - 2;
                return true;
            }
            ++j;
        }
    }

    int n_, k_;
    std::vector<int> c_;  // 1-based; c_[k+1] = n and c_[k+2] = 0 are sentinels
    long pos_ = 0;        // consumed count, used only when k == 1

    friend uint64_t rank_revolving_door(int n, int k, std::span<const int> combo);
};

/// Rank of a combination (ascending values) in the revolving-door order:
/// rank(c_k..c_1) = C(c_k + 1, k) - 1 - rank(c_{k-1}..c_1).
inline uint64_t rank_revolving_door(int /*n*/, int k, std::span<const int> combo) {
    Int r = 0;
    for (int j = k; j >= 1; --j) {
        const Int term = binomial(static_cast<unsigned long>(combo[j - 1]) + 1, j) - 1;
        if ((k - j) % 2 == 0)
            r += term;
        else
            r -= term;
    }
    return r.get_ui();
}

/// Combination with the given rank in the revolving-door order.
inline std::vector<int> unrank_revolving_door(int n, int k, uint64_t rank) {
    std::vector<int> combo(k);
    Int r = Int(static_cast<unsigned long>(rank));
    int hi = n;
    for (int j = k; j >= 1; --j) {
        // Largest c with C(c, j) <= r; combinations whose top element is c
        // occupy revolving-door ranks [C(c, j), C(c+1, j) - 1].
        int c = j - 1;
        for (int cand = hi - 1; cand >= j - 1; --cand) {
            if (binomial(static_cast<unsigned long>(cand), j) <= r) {
                c = cand;
                break;
            }
        }
        combo[j - 1] = c;
        r = binomial(static_cast<unsigned long>(c) + 1, j) - 1 - r;
        hi = c;
    }
    return combo;
}

}  // namespace edgestat
