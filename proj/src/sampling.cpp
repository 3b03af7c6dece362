#include "npslab/sampling.hpp"

#include "npslab/counting.hpp"
#include "npslab/errors.hpp"
#include "npslab/nps.hpp"
#include "npslab/rational.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace nps {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 SeededStream::engine() const {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ (id * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL)));
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("bounded_draw needs a positive bound");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

void shuffle_into(const std::vector<int>& order_index, std::mt19937_64& rng, std::vector<int>& values,
                  std::vector<int>& entries) {
    const std::size_t n = values.size();
    std::iota(values.begin(), values.end(), 1);
    for (std::size_t k = n; k > 1; --k) std::swap(values[k - 1], values[bounded_draw(rng, k)]);
    for (std::size_t r = 0; r < n; ++r) entries[static_cast<std::size_t>(order_index[r])] = values[r];
}

std::vector<int> order_indices(const Partition& lambda) {
    std::vector<int> idx;
    for (const Cell& c : reverse_lex_cells(lambda)) idx.push_back(lambda.index_of(c));
    return idx;
}

unsigned clamp_jobs(unsigned jobs, std::uint64_t work) {
    if (jobs == 0) jobs = 1;
    return static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(work, 1)));
}

template <class Fn>
void run_workers(unsigned jobs, Fn&& fn) {
    if (jobs == 1) {
        fn(0u);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back([&fn, w] { fn(w); });
    for (auto& t : pool) t.join();
}

}  // namespace

Tableau random_tableau(const Partition& lambda, const SeededStream& stream) {
    const auto n = static_cast<std::size_t>(lambda.size());
    std::vector<int> values(n);
    std::vector<int> entries(n);
    auto rng = stream.engine();
    shuffle_into(order_indices(lambda), rng, values, entries);
    return Tableau(lambda, std::move(entries));
}

AvgCaseEstimate estimate_avg_case(const Partition& lambda, std::uint64_t m, std::uint64_t seed, unsigned jobs) {
    if (m < 2) throw DomainError("Monte Carlo estimate needs at least 2 samples");
    jobs = clamp_jobs(jobs, m);
    struct Partial {
        unsigned __int128 sum = 0;
        unsigned __int128 sum_sq = 0;
        long max = 0;
    };
    std::vector<Partial> partials(jobs);
    const auto order = order_indices(lambda);
    run_workers(jobs, [&](unsigned w) {
        NpsSorter sorter(lambda);
        const auto n = static_cast<std::size_t>(lambda.size());
        std::vector<int> values(n), entries(n), hooks(n);
        Partial& part = partials[w];
        for (std::uint64_t r = w; r < m; r += jobs) {
            auto rng = SeededStream{seed, r}.engine();
            shuffle_into(order, rng, values, entries);
            std::fill(hooks.begin(), hooks.end(), 0);
            const long x = sorter.sort_in_place(entries, hooks);
            part.sum += static_cast<unsigned __int128>(x);
            part.sum_sq += static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(x);
            part.max = std::max(part.max, x);
        }
    });
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    long max = 0;
    for (const Partial& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
        max = std::max(max, p.max);
    }
    auto big = [](unsigned __int128 v) {
        BigInt hi(static_cast<unsigned long>(v >> 64));
        BigInt lo(static_cast<unsigned long>(v & 0xffffffffffffffffULL));
        return BigInt(hi * BigInt("18446744073709551616") + lo);
    };
    const BigInt mm(static_cast<unsigned long>(m));
    Rational mean(big(sum), mm);
    mean.canonicalize();
    Rational var = (Rational(big(sum_sq)) - Rational(big(sum)) * mean) / Rational(BigInt(mm - 1));
    var.canonicalize();
    AvgCaseEstimate e;
    e.mean = to_double(mean);
    e.stderr_ = std::sqrt(std::max(0.0, to_double(var)) / static_cast<double>(m));
    e.samples = m;
    e.max_exchanges = max;
    return e;
}

UniformityResult syt_uniformity_test(const Partition& lambda, std::uint64_t m, std::uint64_t seed, unsigned jobs) {
    const BigInt f = syt_count(lambda);
    if (f > 10000) throw RefusalError("uniformity test refuses shapes with more than 10^4 standard tableaux");
    const std::uint64_t fu = f.get_ui();
    if (m < 10 * fu)
        throw RefusalError("uniformity test needs at least 10 samples per standard tableau (m >= " +
                           std::to_string(10 * fu) + ")");
    jobs = clamp_jobs(jobs, m);
    std::vector<std::map<std::vector<int>, std::uint64_t>> tallies(jobs);
    const auto order = order_indices(lambda);
    run_workers(jobs, [&](unsigned w) {
        NpsSorter sorter(lambda);
        const auto n = static_cast<std::size_t>(lambda.size());
        std::vector<int> values(n), entries(n), hooks(n);
        for (std::uint64_t r = w; r < m; r += jobs) {
            auto rng = SeededStream{seed, r}.engine();
            shuffle_into(order, rng, values, entries);
            std::fill(hooks.begin(), hooks.end(), 0);
            sorter.sort_in_place(entries, hooks);
            ++tallies[w][entries];
        }
    });
    std::map<std::vector<int>, std::uint64_t> merged;
    for (const auto& t : tallies)
        for (const auto& [k, v] : t) merged[k] += v;

    UniformityResult result;
    result.dof = static_cast<long>(fu) - 1;
    // SYT that never appeared still count against the fit.
    const double expected = static_cast<double>(m) / static_cast<double>(fu);
    double chi = 0.0;
    for (const auto& [k, v] : merged) {
        result.counts.push_back(v);
        const double diff = static_cast<double>(v) - expected;
        chi += diff * diff / expected;
    }
    chi += static_cast<double>(fu - merged.size()) * expected;
    result.chi_square = result.dof == 0 ? 0.0 : chi;
    return result;
}

double chi_square_quantile(double p, long dof) {
    if (dof <= 0) return 0.0;
    boost::math::chi_squared dist(static_cast<double>(dof));
    return boost::math::quantile(dist, p);
}

}  // namespace nps
