#include "npslab/exact_complexity.hpp"

#include "npslab/counting.hpp"
#include "npslab/errors.hpp"

#include <algorithm>
#include <map>

namespace nps {

int w_distance(const Partition& lambda, Cell c) {
    if (!lambda.contains(c)) throw DomainError("cell outside shape");
    int best = 0;
    for (int i = c.row; i <= lambda.length() && lambda.row_length(i) >= c.col; ++i)
        best = std::max(best, (i - c.row) + (lambda.row_length(i) - c.col));
    return best;
}

long worst_case(const Partition& lambda) {
    // w(i,j) = 1 + max(w(i+1,j), w(i,j+1)) away from corners, filled from the
    // bottom row up and right to left.
    std::vector<std::vector<int>> w(static_cast<std::size_t>(lambda.length()));
    long total = 0;
    for (int i = lambda.length(); i >= 1; --i) {
        auto& row = w[static_cast<std::size_t>(i - 1)];
        row.assign(static_cast<std::size_t>(lambda.row_length(i)), 0);
        for (int j = lambda.row_length(i); j >= 1; --j) {
            int best = -1;
            if (j < lambda.row_length(i)) best = std::max(best, row[static_cast<std::size_t>(j)]);
            if (j <= lambda.row_length(i + 1)) best = std::max(best, w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
            row[static_cast<std::size_t>(j - 1)] = best + 1;
            total += best + 1;
        }
    }
    return total;
}

Tableau worst_case_witness(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    if (n == 0) return Tableau(lambda, entries);

    auto is_free = [&](Cell c) { return entries[static_cast<std::size_t>(lambda.index_of(c))] == 0; };

    int next_value = 1;
    int filled = 0;
    Cell anchor{1, 1};
    while (filled < n) {
        const int w = w_distance(lambda, anchor);
        std::vector<Cell> candidates;
        for (const Cell& corner : lambda.corners())
            if (corner.row >= anchor.row && corner.col >= anchor.col &&
                (corner.row - anchor.row) + (corner.col - anchor.col) == w)
                candidates.push_back(corner);
        std::sort(candidates.begin(), candidates.end());

        bool placed = false;
        for (const Cell& corner : candidates) {
            bool free = true;
            for (int i = anchor.row; i <= corner.row && free; ++i)
                for (int j = anchor.col; j <= corner.col && free; ++j) free = is_free({i, j});
            if (!free) continue;
            // Fill the rectangle in processing order: largest cell gets the
            // smallest value.
            for (int j = corner.col; j >= anchor.col; --j)
                for (int i = corner.row; i >= anchor.row; --i) {
                    entries[static_cast<std::size_t>(lambda.index_of({i, j}))] = next_value++;
                    ++filled;
                }
            placed = true;
            break;
        }
        if (!placed)
            throw InvariantViolation("worst-case witness: no free rectangle from cell (" + std::to_string(anchor.row) +
                                     "," + std::to_string(anchor.col) + ") in shape " + format_partition(lambda));
        if (filled == n) break;

        bool found = false;
        int best_hook = -1;
        for (const Cell& c : lambda.cells()) {
            if (!is_free(c)) continue;
            const int h = cell_stats(lambda, c).hook;
            if (!found || h > best_hook || (h == best_hook && revlex_less(c, anchor))) {
                anchor = c;
                best_hook = h;
                found = true;
            }
        }
    }

    Tableau t(lambda, std::move(entries));
    const long achieved = nps_sort(t).exchanges;
    const long target = worst_case(lambda);
    if (achieved != target)
        throw InvariantViolation("worst-case witness for " + format_partition(lambda) + " performs " +
                                 std::to_string(achieved) + " exchanges, expected " + std::to_string(target));
    return t;
}

Rational average_case_bruteforce(const Partition& lambda, const EnumerationLimits& limits) {
    const ExhaustiveStats stats = exhaustive_exchange_stats(lambda, limits);
    Rational c(BigInt(std::to_string(stats.total_exchanges)), factorial(static_cast<unsigned>(lambda.size())));
    c.canonicalize();
    return c;
}

long worst_case_bruteforce(const Partition& lambda, const EnumerationLimits& limits) {
    return exhaustive_exchange_stats(lambda, limits).max_exchanges;
}

Rational expected_hook_abs(const Partition& lambda) {
    Rational e = 0;
    for (const Cell& c : lambda.cells()) {
        const auto s = cell_stats(lambda, c);
        Rational term(s.arm * s.arm + s.arm + s.leg * s.leg + s.leg, 2 * s.hook);
        term.canonicalize();
        e += term;
    }
    return e;
}

namespace {

/// f^{(a,b)} for a >= b >= 0.
BigInt two_row_syt(long a, long b) {
    if (b < 0 || a < b) return 0;
    BigInt num = binomial(a + b, b) * (a - b + 1);
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(a + 1));
    return q;
}

class SytCache {
public:
    const BigInt& get(const Partition& mu) {
        auto it = cache_.find(mu.parts());
        if (it == cache_.end()) it = cache_.emplace(mu.parts(), syt_count(mu)).first;
        return it->second;
    }

private:
    std::map<std::vector<int>, BigInt> cache_;
};

bool is_corner_of(const Partition& mu, Cell x) {
    return mu.contains(x) && mu.row_length(x.row) == x.col && mu.row_length(x.row + 1) < x.col;
}

}  // namespace

BigInt f_fixed_entry_two_row(const Partition& lambda, Cell x, int k) {
    if (!lambda.contains(x)) throw DomainError("cell outside shape");
    if (lambda.length() > 2) throw DomainError("closed form needs at most two rows");
    const long l1 = lambda.row_length(1);
    const long l2 = lambda.row_length(2);
    const long n = l1 + l2;
    const long j = x.col;
    if (k < 1 || k > n) return 0;
    // mu is the set of entries <= k, mu with x removed holds the entries < k.
    long mu1;
    long mu2;
    if (x.row == 1) {
        mu1 = j;
        mu2 = k - j;
        if (mu2 < 0 || mu2 > j - 1 || mu2 > l2) return 0;
    } else {
        mu1 = k - j;
        mu2 = j;
        if (mu1 < j || mu1 > l1) return 0;
    }
    const BigInt inner = x.row == 1 ? two_row_syt(mu1 - 1, mu2) : two_row_syt(mu1, mu2 - 1);
    const BigInt skew = binomial(n - k, l1 - mu1) - binomial(n - k, l2 - mu1 - 1);
    return inner * skew;
}

BigInt f_fixed_entry_general(const Partition& lambda, Cell x, int k) {
    if (!lambda.contains(x)) throw DomainError("cell outside shape");
    BigInt total = 0;
    if (k < 1 || k > lambda.size()) return total;
    SytCache cache;
    for_each_subpartition(lambda, [&](const Partition& mu) {
        if (mu.size() != k || !is_corner_of(mu, x)) return;
        total += cache.get(remove_corner(mu, x)) * skew_syt_count(lambda, mu);
    });
    return total;
}

BigInt f_fixed_entry(const Partition& lambda, Cell x, int k) {
    if (lambda.length() <= 2) return f_fixed_entry_two_row(lambda, x, k);
    return f_fixed_entry_general(lambda, x, k);
}

std::vector<std::vector<BigInt>> fixed_entry_table(const Partition& lambda) {
    const auto n = static_cast<std::size_t>(lambda.size());
    std::vector<std::vector<BigInt>> table(n, std::vector<BigInt>(n, BigInt(0)));
    SytCache cache;
    for_each_subpartition(lambda, [&](const Partition& mu) {
        if (mu.empty()) return;
        const BigInt skew = skew_syt_count(lambda, mu);
        for (const Cell& x : mu.corners())
            table[static_cast<std::size_t>(lambda.index_of(x))][static_cast<std::size_t>(mu.size() - 1)] +=
                cache.get(remove_corner(mu, x)) * skew;
    });
    return table;
}

Rational average_case_chicago(const Partition& lambda, int max_size) {
    if (lambda.size() > max_size)
        throw RefusalError("refusing subshape summation for size " + std::to_string(lambda.size()) + " > " +
                           std::to_string(max_size));
    const auto n = static_cast<unsigned>(lambda.size());
    if (n == 0) return 0;
    const auto table = fixed_entry_table(lambda);
    const BigInt f = syt_count(lambda);
    const Rational hn = harmonic(n);
    Rational sum = 0;
    for (const Cell& x : lambda.cells()) {
        const int dist = distance_from_origin(x);
        if (dist == 0) continue;
        const auto& row = table[static_cast<std::size_t>(lambda.index_of(x))];
        Rational cell_sum = 0;
        for (unsigned k = 1; k <= n; ++k) {
            const BigInt& count = row[k - 1];
            if (count == 0) continue;
            cell_sum += Rational(count) * (hn - harmonic(n - k) - 1);
        }
        sum += cell_sum * dist;
    }
    sum /= Rational(f);
    sum.canonicalize();
    return sum;
}

}  // namespace nps
