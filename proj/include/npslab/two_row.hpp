#pragma once

#include "npslab/partition.hpp"
#include "npslab/rational.hpp"

#include <array>

namespace nps {

/// lambda = (lambda1, lambda2) with 0 <= lambda2 <= lambda1.
struct TwoRowShape {
    long lambda1 = 1;
    long lambda2 = 0;

    TwoRowShape(long l1, long l2);
    /// Throws DomainError for shapes with three or more rows or an empty shape.
    static TwoRowShape from_partition(const Partition& lambda);

    long delta() const { return lambda1 - lambda2; }
    long size() const { return lambda1 + lambda2; }
    Partition partition() const;
};

enum class S0Form { direct, nested };

/// S0 = sum_{k=1}^{l2} C(l2,k) (-1)^k (2k-2)! / (l1-l2+2)_{2k-1}.
/// The nested form needs lambda2 >= 1 and is evaluated in one forward pass.
Rational s0(const TwoRowShape& shape, S0Form form = S0Form::direct);

/// S0(l2, l2) = -2^{2 l2} / C(2 l2, l2) + H_{l2}/2 + 1.
Rational s0_equal_rows(long lambda2);

/// S0(l2 + delta, l2) in the representation with symbolic l2 and fixed delta.
Rational s0_fixed_distance(long lambda2, long delta);

/// C(lambda) = l1(l1-1)/4 + l2(l2-3)/4 - 2 S0.
Rational c_closed(const TwoRowShape& shape);

/// The leading harmonic term plus the five double sums over (j, k).
/// Throws DomainError when lambda2 = 0.
Rational c_double_sums(const TwoRowShape& shape);

/// C(l2, l2) = l2(l2-2)/2 - 2 S0(l2, l2) in closed form.
Rational c_equal_rows(long lambda2);

/// C(l2 + delta, l2) through s0_fixed_distance.
Rational c_fixed_distance(long lambda2, long delta);

struct IdentitySides {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

/// The three auxiliary sums used to collapse the nested form at l1 = l2:
///   sum 2^{-i} C(i+l2, i)               = 2^{l2} - 1
///   sum 2^i / (i C(i+l2, i))            = 2^{-l2} sum 2^i / i
///   sum 2^i / (i C(i+l2, i)) * inner(i) = -2^{-l2} sum 2^i / i + 2 H_{l2}
/// where inner(i) = sum_{j<=i} 2^{-j} C(j+l2, j) and all sums start at 1.
std::array<IdentitySides, 3> auxiliary_identities(long lambda2);

}  // namespace nps
