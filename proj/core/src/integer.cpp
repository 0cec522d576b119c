#include "ramlab/arith/integer.hpp"

#include "ramlab/errors.hpp"

namespace ramlab {

std::pair<Integer, Integer> IntegerRing::divmod(const Integer& a, const Integer& b) const {
    if (sgn(b) == 0) throw DomainError("integer division by zero");
    Integer m = abs(b);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    Integer q = (a - r) / b;
    return {q, r};
}

Rational RationalField::inv(const Rational& a) const {
    if (sgn(a) == 0) throw DomainError("rational inverse of zero");
    Rational r;
    mpq_inv(r.get_mpq_t(), a.get_mpq_t());
    return r;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long valuation(Integer n, const Integer& p) {
    if (sgn(n) == 0) throw DomainError("valuation of zero");
    long k = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++k;
    }
    return k;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<Integer> prime_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    if (n < 2) return out;
    for (Integer d = 2; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace ramlab
