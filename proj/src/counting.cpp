#include "npslab/counting.hpp"

#include "npslab/errors.hpp"

#include <utility>

namespace nps {

BigInt hook_product(const Partition& lambda) {
    BigInt p = 1;
    for (const Cell& c : lambda.cells()) p *= cell_stats(lambda, c).hook;
    return p;
}

BigInt syt_count(const Partition& lambda) {
    const BigInt num = factorial(static_cast<unsigned>(lambda.size()));
    const BigInt den = hook_product(lambda);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InvariantViolation("hook product does not divide n!");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Rational determinant(std::vector<Rational> m, std::size_t dim) {
    if (m.size() != dim * dim) throw DomainError("matrix does not have dim * dim entries");
    Rational det = 1;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && m[pivot * dim + col] == 0) ++pivot;
        if (pivot == dim) return 0;
        if (pivot != col) {
            for (std::size_t k = 0; k < dim; ++k) std::swap(m[pivot * dim + k], m[col * dim + k]);
            det = -det;
        }
        const Rational p = m[col * dim + col];
        det *= p;
        for (std::size_t r = col + 1; r < dim; ++r) {
            if (m[r * dim + col] == 0) continue;
            const Rational factor = m[r * dim + col] / p;
            for (std::size_t k = col; k < dim; ++k) m[r * dim + k] -= factor * m[col * dim + k];
        }
    }
    return det;
}

BigInt skew_syt_count(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw DomainError("mu is not contained in lambda");
    const auto dim = static_cast<std::size_t>(lambda.length());
    const int skew_size = lambda.size() - mu.size();
    std::vector<Rational> m(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const int arg = lambda.row_length(static_cast<int>(i) + 1) - mu.row_length(static_cast<int>(j) + 1) -
                            static_cast<int>(i) + static_cast<int>(j);
            m[i * dim + j] = arg < 0 ? Rational(0) : Rational(BigInt(1), factorial(static_cast<unsigned>(arg)));
        }
    }
    const Rational value = determinant(std::move(m), dim) * factorial(static_cast<unsigned>(skew_size));
    if (value.get_den() != 1 || value < 0) throw InvariantViolation("Aitken determinant is not a natural number");
    return value.get_num();
}

}  // namespace nps
