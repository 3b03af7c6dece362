#pragma once

#include "npslab/partition.hpp"
#include "npslab/tableau.hpp"

#include <cstdint>
#include <random>

namespace nps {

/// Substream `id` of master seed `seed`.  The engine is seeded through
/// splitmix64 so neighbouring ids give unrelated sequences.
struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t id = 0;

    std::mt19937_64 engine() const;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform integer in [0, bound) without modulo bias; bound > 0.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform random filling: Fisher-Yates shuffle of 1..n placed along the
/// processing order.
Tableau random_tableau(const Partition& lambda, const SeededStream& stream);

struct AvgCaseEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    long max_exchanges = 0;
};

/// Sample r uses stream (seed, r); workers take r = w (mod jobs).  Moments are
/// summed exactly so the result does not depend on jobs.  Throws DomainError
/// for m < 2.
AvgCaseEstimate estimate_avg_case(const Partition& lambda, std::uint64_t m, std::uint64_t seed, unsigned jobs = 1);

struct UniformityResult {
    double chi_square = 0.0;
    long dof = 0;
    std::vector<std::uint64_t> counts;  // observed SYT, ordered by row-major entries
};

/// Pearson chi-square of NPS outputs on m uniform fillings against the
/// uniform law on SYT.  Refuses when f^lambda > 10^4 or m < 10 f^lambda.
UniformityResult syt_uniformity_test(const Partition& lambda, std::uint64_t m, std::uint64_t seed, unsigned jobs = 1);

/// Upper quantile of the chi-square distribution: P(X <= x) = p.
double chi_square_quantile(double p, long dof);

}  // namespace nps
