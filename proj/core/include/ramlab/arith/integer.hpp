#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/arith/ring.hpp"

namespace ramlab {

/// Arbitrary-precision integer (sign-magnitude, canonical).
using Integer = mpz_class;
/// Reduced fraction with positive denominator.
using Rational = mpq_class;

class IntegerRing {
   public:
    using Elem = Integer;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long n) const { return n; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    Integer characteristic() const { return 0; }

    /// Floor-style division with 0 <= r < |b|.
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
    Elem normalizer(const Elem& a) const { return sgn(a) < 0 ? -1 : 1; }

    bool operator==(const IntegerRing&) const = default;
};

class RationalField {
   public:
    using Elem = Rational;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long n) const { return n; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    Integer characteristic() const { return 0; }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return {div(a, b), 0}; }
    Elem normalizer(const Elem& a) const { return is_zero(a) ? one() : inv(a); }

    bool operator==(const RationalField&) const = default;
};

/// Deterministic primality for the sizes used here (GMP with 40 rounds).
bool is_prime(const Integer& n);
/// Largest k with p^k | n; n must be nonzero.
long valuation(Integer n, const Integer& p);
/// Primes in [2, bound].
std::vector<long> primes_up_to(long bound);
/// Sorted distinct prime divisors of |n| (trial division; n small).
std::vector<Integer> prime_divisors(Integer n);

}  // namespace ramlab
