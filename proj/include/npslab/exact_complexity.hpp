#pragma once

#include "npslab/nps.hpp"
#include "npslab/partition.hpp"
#include "npslab/rational.hpp"
#include "npslab/tableau.hpp"

#include <vector>

namespace nps {

/// w(i,j): the largest (i'-i)+(j'-j) over cells (i',j') of lambda weakly
/// South-East of c.  Throws DomainError if c is not in lambda.
int w_distance(const Partition& lambda, Cell c);

/// W(lambda) = sum of w over all cells, the exact worst case of NPS.
long worst_case(const Partition& lambda);

/// Builds a filling on which NPS performs exactly worst_case(lambda)
/// exchanges: repeatedly take the undefined cell of largest hook
/// (reverse-lex smallest on ties), pick a farthest South-East corner (smallest
/// row first, falling back to the other candidates when the rectangle would
/// overlap filled cells), and fill that rectangle with the next block of
/// integers in processing order.  Throws InvariantViolation if no candidate
/// rectangle is free or the result does not attain W(lambda).
Tableau worst_case_witness(const Partition& lambda);

/// C(lambda) = (1/n!) sum_T n(T) by running NPS on every filling.
Rational average_case_bruteforce(const Partition& lambda, const EnumerationLimits& limits = {});

/// max_T n(T) by running NPS on every filling.
long worst_case_bruteforce(const Partition& lambda, const EnumerationLimits& limits = {});

/// E|H| for a uniform random hook tableau:
/// sum over cells of (arm^2 + arm + leg^2 + leg) / (2 hook).
Rational expected_hook_abs(const Partition& lambda);

/// f^lambda(x, k): number of SYT of shape lambda with entry k in cell x.
/// Zero when k is outside 1..n or outside the support of x.  Two-row shapes
/// use the closed form; everything else sums over subshapes.
BigInt f_fixed_entry(const Partition& lambda, Cell x, int k);

/// Subshape summation for any shape:
/// sum over mu subset lambda, |mu| = k, x a corner of mu, of f^{mu - x} f^{lambda/mu}.
BigInt f_fixed_entry_general(const Partition& lambda, Cell x, int k);

/// Closed form for shapes with at most two rows.
BigInt f_fixed_entry_two_row(const Partition& lambda, Cell x, int k);

/// table[index_of(x)][k-1] = f^lambda(x, k) for all cells and all k, built
/// from one pass over all subshapes.
std::vector<std::vector<BigInt>> fixed_entry_table(const Partition& lambda);

/// C(lambda) = sum_x sum_k |x| f^lambda(x,k)/f^lambda (H_n - H_{n-k} - 1).
/// Refuses shapes larger than max_size.
Rational average_case_chicago(const Partition& lambda, int max_size = 30);

}  // namespace nps
