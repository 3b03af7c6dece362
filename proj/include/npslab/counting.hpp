#pragma once

#include "npslab/partition.hpp"
#include "npslab/rational.hpp"

namespace nps {

/// Product of all hook lengths; also the number of hook tableaux.  1 on ().
BigInt hook_product(const Partition& lambda);

/// Number of standard Young tableaux via the hook-length formula.
BigInt syt_count(const Partition& lambda);

/// Number of standard fillings of the skew shape lambda/mu via Aitken's
/// determinant, (|lambda|-|mu|)! det[1/(lambda_i - mu_j - i + j)!], with
/// 1/m! = 0 for m < 0.  Throws DomainError if mu is not contained in lambda.
BigInt skew_syt_count(const Partition& lambda, const Partition& mu);

/// Exact determinant of a square rational matrix (row-major), by Gaussian
/// elimination.
Rational determinant(std::vector<Rational> matrix, std::size_t dim);

}  // namespace nps
