#pragma once

// Independent reference implementations and generators used only by tests.

#include "npslab/partition.hpp"
#include "npslab/rational.hpp"
#include "npslab/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using nps::BigInt;
using nps::Cell;
using nps::Partition;

/// Outer corners of lambda as cells.
inline std::vector<Cell> outer_corners(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row_length(i + 1) < lambda.row_length(i)) out.push_back({i, lambda.row_length(i)});
    return out;
}

inline Partition without(const Partition& lambda, Cell c) {
    std::vector<int> parts = lambda.parts();
    --parts[static_cast<std::size_t>(c.row - 1)];
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);
}

/// Number of SYT of shape lambda / mu by peeling off the largest entry.
inline BigInt count_skew_syt(const Partition& lambda, const Partition& mu) {
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    if (lambda == mu) return 1;
    const auto key = std::make_pair(lambda.parts(), mu.parts());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const Cell& c : outer_corners(lambda)) {
        const Partition smaller = without(lambda, c);
        if (smaller.contains(mu)) total += count_skew_syt(smaller, mu);
    }
    memo.emplace(key, total);
    return total;
}

inline BigInt count_syt(const Partition& lambda) { return count_skew_syt(lambda, Partition()); }

/// Every SYT of shape lambda, row-major.
inline std::vector<std::vector<int>> all_syt(const Partition& lambda) {
    std::vector<std::vector<int>> out;
    std::vector<int> fill(static_cast<std::size_t>(lambda.size()), 0);
    std::function<void(const Partition&)> rec = [&](const Partition& shape) {
        if (shape.empty()) {
            out.push_back(fill);
            return;
        }
        for (const Cell& c : outer_corners(shape)) {
            fill[static_cast<std::size_t>(lambda.index_of(c))] = shape.size();
            rec(without(shape, c));
        }
    };
    rec(lambda);
    return out;
}

/// A partition of n with parts drawn by a random walk: split off a uniform
/// part size at most the previous part, repeat.
inline Partition random_partition(std::mt19937_64& rng, int n) {
    std::vector<int> parts;
    int left = n;
    int cap = n;
    while (left > 0) {
        const int hi = std::min(cap, left);
        std::uniform_int_distribution<int> pick(1, hi);
        const int p = pick(rng);
        parts.push_back(p);
        left -= p;
        cap = p;
    }
    return Partition(parts);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

inline nps::Tableau random_filling(std::mt19937_64& rng, const Partition& lambda) {
    return nps::Tableau(lambda, random_permutation(rng, lambda.size()));
}

/// All partitions with 1 <= |lambda| <= max_size.
inline std::vector<Partition> shapes_up_to(int max_size) {
    std::vector<Partition> all;
    for (int n = 1; n <= max_size; ++n)
        for (auto& p : nps::partitions_of(n)) all.push_back(std::move(p));
    return all;
}

}  // namespace oracle
