#include "npslab/two_row.hpp"

#include "npslab/errors.hpp"

#include <string>

namespace nps {

namespace {

Rational q(const BigInt& z) { return Rational(z); }

Rational h(long n) { return harmonic(static_cast<unsigned>(n)); }

Rational ratio(long p, long d) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

BigInt binom_or_zero(long n, long k) { return binomial(n, k); }

}  // namespace

TwoRowShape::TwoRowShape(long l1, long l2) : lambda1(l1), lambda2(l2) {
    if (l1 < 1 || l2 < 0) throw DomainError("two-row shape needs lambda1 >= 1 and lambda2 >= 0");
    if (l2 > l1)
        throw DomainError("two-row shape needs lambda2 <= lambda1, got (" + std::to_string(l1) + "," +
                          std::to_string(l2) + ")");
}

TwoRowShape TwoRowShape::from_partition(const Partition& lambda) {
    if (lambda.empty()) throw DomainError("empty shape is not a two-row shape");
    if (lambda.length() > 2) throw DomainError("shape " + format_partition(lambda) + " has more than two rows");
    return TwoRowShape(lambda.row_length(1), lambda.row_length(2));
}

Partition TwoRowShape::partition() const {
    if (lambda2 == 0) return Partition({static_cast<int>(lambda1)});
    return Partition({static_cast<int>(lambda1), static_cast<int>(lambda2)});
}

Rational s0(const TwoRowShape& shape, S0Form form) {
    const long l1 = shape.lambda1;
    const long l2 = shape.lambda2;
    if (form == S0Form::direct) {
        Rational sum = 0;
        const Rational base(l1 - l2 + 2);
        for (long k = 1; k <= l2; ++k) {
            Rational term = q(binomial(l2, k) * factorial(static_cast<unsigned>(2 * k - 2))) /
                            pochhammer_rising(base, static_cast<unsigned>(2 * k - 1));
            if (k % 2 == 1) term = -term;
            sum += term;
        }
        return sum;
    }
    if (l2 < 1) throw DomainError("nested representation of S0 needs lambda2 >= 1");
    Rational inner = 0;
    Rational nested = 0;
    Rational plain = 0;
    for (long i = 1; i <= l2; ++i) {
        const BigInt b = binomial(i + l1, i);
        inner += q(b) * pow2(-i);
        const Rational w = pow2(i) / (q(b) * i);
        nested += w * inner;
        plain += w;
    }
    const long d = 1 + l1 - l2;
    Rational r = -pow2(l2) / q(binomial(l1 + l2, l2)) * (inner + 1);
    r -= ratio(d, 2) * nested;
    r -= ratio(d, 2) * plain;
    r += Rational(d) * (h(l1) + h(l2) / 2 - h(l1 - l2));
    r += 1;
    return r;
}

Rational s0_equal_rows(long lambda2) {
    if (lambda2 < 1) throw DomainError("equal-rows formula needs lambda2 >= 1");
    return -pow2(2 * lambda2) / q(binomial(2 * lambda2, lambda2)) + h(lambda2) / 2 + 1;
}

Rational s0_fixed_distance(long lambda2, long delta) {
    if (lambda2 < 1 || delta < 0) throw DomainError("fixed-distance formula needs lambda2 >= 1 and delta >= 0");
    const long l2 = lambda2;
    const long d = delta;
    const Rational c2 = q(binomial(2 * l2, l2));
    const Rational four_l2 = pow2(2 * l2);
    Rational sa = 0;
    Rational sb = 0;
    Rational sc = 0;
    Rational inner = 0;
    for (long i = 1; i <= d; ++i) {
        const Rational up = pow2(i) * q(binomial(i + l2, i)) / (q(binomial(i + 2 * l2, i)) * (1 + i + 2 * l2));
        const Rational term = q(binomial(i + 2 * l2, i)) / (pow2(i) * q(binomial(i + l2, i)) * (i + 2 * l2));
        sa += up;
        sb += term;
        inner += term;
        sc += up * inner;
    }
    const Rational bd = q(binomial(d + l2, d)) / q(binomial(d + 2 * l2, d));
    Rational r = (Rational(-1 - d) + Rational(d + 1) * four_l2 / c2) * sa;
    r += pow2(d + 2) * (l2 * (1 + d + l2)) * bd / (1 + d + 2 * l2) * sb;
    r -= Rational(2 * (d + 1) * l2) * sc;
    r += four_l2 * (d + 1) / (c2 * (2 * l2 + 1));
    r += pow2(d + 1) * (1 + d + l2) * bd / (c2 * (1 + d + 2 * l2)) * (c2 - four_l2);
    r -= ratio(d + 1, 2 * l2 + 1);
    r += Rational(d + 1) * (h(d + 2 * l2) - h(2 * l2) - h(d));
    r += ratio(d + 1, 2) * h(l2);
    return r;
}

Rational c_closed(const TwoRowShape& shape) {
    const long l1 = shape.lambda1;
    const long l2 = shape.lambda2;
    Rational c = ratio(l1 * (l1 - 1), 4) + ratio(l2 * (l2 - 3), 4) - 2 * s0(shape, S0Form::direct);
    c.canonicalize();
    return c;
}

Rational c_double_sums(const TwoRowShape& shape) {
    const long l1 = shape.lambda1;
    const long l2 = shape.lambda2;
    if (l2 < 1) throw DomainError("double-sum representation needs two nonempty rows");
    const long n = l1 + l2;
    Rational lead = q(binomial(l1, 2) + binomial(l2 + 1, 2)) * (h(n) - 1);

    Rational t = 0;
    for (long j = 1; j <= l2; ++j)
        for (long k = j; k <= 2 * j - 1; ++k) {
            const Rational w = ratio((j - 1) * (2 * j - k), k) * q(binomial(k, j)) * h(n - k);
            t -= w * q(binom_or_zero(n - k, l1 - j));
            t += w * q(binom_or_zero(n - k, l2 - j - 1));
        }
    for (long j = l2 + 1; j <= l1; ++j)
        for (long k = j; k <= l2 + j; ++k)
            t -= ratio((j - 1) * (2 * j - k), k) * q(binomial(k, j)) * h(n - k) * q(binom_or_zero(n - k, l1 - j));
    for (long j = 1; j <= l2; ++j) {
        for (long k = 2 * j; k <= l1 + j; ++k)
            t -= ratio(j * (k - 2 * j + 2), k) * q(binomial(k, j - 1)) * h(n - k) * q(binom_or_zero(n - k, l2 - j));
        for (long k = 2 * j; k <= l2 + j; ++k)
            t += ratio(j * (k - 2 * j + 2), k) * q(binomial(k, j - 1)) * h(n - k) *
                 q(binom_or_zero(n - k, l1 - j + 1));
    }
    const Rational f = ratio(l1 - l2 + 1, l1 + 1) * q(binomial(n, l2));
    Rational c = lead + t / f;
    c.canonicalize();
    return c;
}

Rational c_equal_rows(long lambda2) {
    if (lambda2 < 1) throw DomainError("equal-rows formula needs lambda2 >= 1");
    Rational c = ratio(lambda2 * (lambda2 - 2), 2) -
                 2 * (-pow2(2 * lambda2) / q(binomial(2 * lambda2, lambda2)) + h(lambda2) / 2 + 1);
    c.canonicalize();
    return c;
}

Rational c_fixed_distance(long lambda2, long delta) {
    const long l1 = lambda2 + delta;
    Rational c = ratio(l1 * (l1 - 1), 4) + ratio(lambda2 * (lambda2 - 3), 4) - 2 * s0_fixed_distance(lambda2, delta);
    c.canonicalize();
    return c;
}

std::array<IdentitySides, 3> auxiliary_identities(long lambda2) {
    if (lambda2 < 1) throw DomainError("auxiliary identities need lambda2 >= 1");
    const long l2 = lambda2;
    Rational hyp = 0;
    Rational plain = 0;
    Rational nested = 0;
    Rational geometric = 0;
    for (long i = 1; i <= l2; ++i) {
        const BigInt b = binomial(i + l2, i);
        hyp += q(b) * pow2(-i);
        const Rational w = pow2(i) / (q(b) * i);
        plain += w;
        nested += w * hyp;
        geometric += pow2(i) / i;
    }
    return {IdentitySides{hyp, pow2(l2) - 1}, IdentitySides{plain, pow2(-l2) * geometric},
            IdentitySides{nested, -pow2(-l2) * geometric + 2 * h(l2)}};
}

}  // namespace nps
