#include "npslab/rational.hpp"

#include "npslab/errors.hpp"

#include <vector>

namespace nps {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational harmonic(unsigned n) {
    // Memoized prefix; harmonic numbers are requested over and over by the
    // two-row formulas with small arguments.
    thread_local std::vector<Rational> table{Rational(0)};
    while (table.size() <= n) {
        Rational next = table.back() + Rational(1, static_cast<unsigned long>(table.size()));
        next.canonicalize();
        table.push_back(std::move(next));
    }
    return table[n];
}

Rational pochhammer_rising(const Rational& x, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= x + i;
    return r;
}

Rational pow2(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    Rational r(BigInt(1), p);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    const auto not_space = s.find_first_not_of(" \t");
    if (not_space == std::string::npos) throw DomainError("empty number");
    s = s.substr(not_space, s.find_last_not_of(" \t") - not_space + 1);

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const auto frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") throw DomainError("malformed decimal: " + s);
        BigInt num;
        if (digits[0] == '+') digits.erase(0, 1);
        if (num.set_str(digits, 10) != 0) throw DomainError("malformed decimal: " + s);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (s[0] == '+') s.erase(0, 1);
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("malformed rational: " + s);
    r.canonicalize();
    return r;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace nps
