#include <algorithm>
#include <random>

#include "doctest.h"
#include "ramlab/arith/parse.hpp"
#include "ramlab/errors.hpp"
#include "ramlab/identity/identity.hpp"

using namespace ramlab;

namespace {

Poly<IntegerRing> zpoly(const char* s) { return to_integer_poly(parse_text_poly(s)); }

Poly<FqPolyRing> tpoly(const char* s, const FiniteField& fq) { return to_fq_t_poly(parse_text_poly(s), fq); }

GfPoly tprime(const char* s, const FiniteField& fq) { return to_fq_poly_in_t(parse_text_poly(s), fq); }

std::vector<std::pair<long, long>> ef(const std::vector<RamifiedPrime>& ps) {
    std::vector<std::pair<long, long>> out;
    for (const auto& p : ps) out.emplace_back(p.e, p.f);
    std::sort(out.begin(), out.end());
    return out;
}

// Degrees of the factors of f mod p, by trial division over all monic
// polynomials of small degree. Only used for p small and deg f <= 3.
std::vector<long> factor_degrees_mod(const Poly<IntegerRing>& f, unsigned p) {
    const auto k = FiniteField::get(p);
    GfPoly g = f.map(k, [&](const Integer& c) { return k.from_integer(c); });
    std::vector<long> out;
    for (unsigned d = 1; g.degree() > 0 && d <= static_cast<unsigned>(g.degree()); ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned code = 0; code < count; ++code) {
            std::vector<GfElem> c;
            unsigned x = code;
            for (unsigned i = 0; i < d; ++i) {
                c.push_back(k.element(x % p));
                x /= p;
            }
            c.push_back(k.one());
            const GfPoly h(k, c);
            while (g.degree() >= static_cast<long>(d) && divmod(g, h).second.is_zero()) {
                g = divmod(g, h).first;
                out.push_back(d);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("lhs_sum on small number fields") {
    auto [s1, p1] = lhs_sum(zpoly("x^2+1"), Integer(5));
    CHECK(s1 == 2);
    CHECK(ef(p1) == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}});

    auto [s2, p2] = lhs_sum(zpoly("x^3-2"), Integer(2));
    CHECK(s2 == 3);
    CHECK(ef(p2) == std::vector<std::pair<long, long>>{{3, 1}});

    // x^3 - 2 = (x - 3)(x^2 + 3x + 4) mod 5 and the quadratic has no root.
    auto [s3, p3] = lhs_sum(zpoly("x^3-2"), Integer(5));
    CHECK(s3 == 3);
    CHECK(factor_degrees_mod(zpoly("x^3-2"), 5) == std::vector<long>{1, 2});
    CHECK(ef(p3) == std::vector<std::pair<long, long>>{{1, 1}, {1, 2}});
}

TEST_CASE("rhs_dim") {
    const auto r1 = rhs_dim(zpoly("x^2+1"), Integer(5), 64);
    CHECK(r1.dim == 2);
    CHECK(r1.certified);

    const auto f3 = FiniteField::get(3);
    const auto r2 = rhs_dim(tpoly("x^3-t", f3), tprime("t", f3), 64);
    CHECK(r2.dim == 3);
    CHECK(r2.certified);

    CHECK_THROWS_AS(rhs_dim(zpoly("x^2+1"), Integer(5), 3), PrecisionTooSmall);
}

TEST_CASE("check_identity examples") {
    SUBCASE("x^2+1 at 2") {
        const auto r = check_identity(zpoly("x^2+1"), Integer(2), 64);
        CHECK(r.degree == 2);
        CHECK(r.lhs == 2);
        CHECK(r.rhs == 2);
        CHECK(r.radical_dim == 0);
        CHECK(ef(r.primes) == std::vector<std::pair<long, long>>{{2, 1}});
        CHECK(r.all_verdicts());
        CHECK(r.semisimple);
        CHECK(r.caveats.empty());
    }
    SUBCASE("index divisor") {
        const auto r = check_identity(zpoly("x^3-x^2-2x-8"), Integer(2), 64);
        CHECK(r.degree == 3);
        CHECK(r.lhs == 3);
        CHECK(r.rhs == 3);
        CHECK(ef(r.primes) == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}, {1, 1}});
        CHECK(r.order_basis == std::vector<std::string>{"1", "θ", "(θ^2 + θ)/2"});
        CHECK(r.all_verdicts());
    }
    SUBCASE("function field") {
        const auto f5 = FiniteField::get(5);
        const auto r = check_identity(tpoly("x^2-t", f5), tprime("t", f5), 64);
        CHECK(r.degree == 2);
        CHECK(r.lhs == 2);
        CHECK(r.rhs == 2);
        CHECK(ef(r.primes) == std::vector<std::pair<long, long>>{{2, 1}});
        CHECK(r.all_verdicts());
    }
    SUBCASE("purely inseparable") {
        for (unsigned p : {2u, 3u, 5u}) {
            const auto fp = FiniteField::get(p);
            const std::string f = "x^" + std::to_string(p) + "-t";
            const auto r = check_identity(tpoly(f.c_str(), fp), tprime("t", fp), 64);
            CHECK(ef(r.primes) == std::vector<std::pair<long, long>>{{static_cast<long>(p), 1}});
            CHECK(r.all_verdicts());
            CHECK(r.caveats.empty());
        }
    }
    SUBCASE("reducible input gets the caveat") {
        const auto r = check_identity(zpoly("x^2-3x+2"), Integer(3), 64);
        CHECK(r.caveats == std::vector<std::string>{kIrreducibilityCaveat});
    }
}

TEST_CASE("irreducibility screen") {
    CHECK(irreducibility_witnessed(zpoly("x^4+1")) == false);  // reducible mod every prime
    CHECK(irreducibility_witnessed(zpoly("x^3-2")));
    CHECK(irreducibility_witnessed(zpoly("x^5-x-1")));
    CHECK_FALSE(irreducibility_witnessed(zpoly("x^4+4")));
    const auto f3 = FiniteField::get(3);
    CHECK(irreducibility_witnessed(tpoly("x^3-t", f3)));
    CHECK_FALSE(irreducibility_witnessed(tpoly("x^3-t^3", f3)));
    CHECK(irreducibility_witnessed(tpoly("x^2-t", f3)));
}

TEST_CASE("report invariants over random inputs") {
    std::mt19937_64 rng(17);
    int reports = 0;
    while (reports < 120) {
        const int deg = 2 + static_cast<int>(rng() % 3);
        std::vector<Integer> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
        c.emplace_back(1);
        const Poly<IntegerRing> f(IntegerRing{}, c);
        if (discriminant(f) == 0 || !irreducibility_witnessed(f)) continue;
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            const auto r = check_identity(f, Integer(p), 32);
            ++reports;
            CHECK(r.certified);
            CHECK(r.eq11);
            CHECK(r.inequality);
            CHECK(r.lhs <= r.degree);
            CHECK(r.rhs <= r.degree);
            CHECK(r.e5_c == r.e5_d);
            CHECK((r.radical_dim == 0) == r.classical);
            CHECK(r.radical_dim + r.rhs == r.degree);
            CHECK(r.all_verdicts());
        }
    }
}
