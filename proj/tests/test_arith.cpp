#include <random>

#include "doctest.h"
#include "ramlab/arith/parse.hpp"
#include "ramlab/arith/polyalg.hpp"

using namespace ramlab;

namespace {

Poly<RationalField> qpoly(std::string_view s) { return to_rational_poly(parse_text_poly(s)); }
Poly<IntegerRing> zpoly(std::string_view s) { return to_integer_poly(parse_text_poly(s)); }
GfPoly gpoly(const FiniteField& f, std::vector<unsigned> c) {
    std::vector<GfElem> e;
    for (auto v : c) e.push_back(f.element(v));
    return GfPoly(f, std::move(e));
}

GfPoly random_gf(const FiniteField& f, int max_deg, std::mt19937_64& rng) {
    std::vector<GfElem> c;
    const int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int i = 0; i <= d; ++i) c.push_back(f.element(static_cast<std::uint32_t>(rng() % f.order())));
    return GfPoly(f, std::move(c));
}

// Every monic polynomial of the given degree over a small field.
std::vector<GfPoly> all_monic(const FiniteField& f, int deg) {
    std::vector<GfPoly> out;
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= f.order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<GfElem> c;
        std::uint64_t v = idx;
        for (int i = 0; i < deg; ++i) {
            c.push_back(f.element(static_cast<std::uint32_t>(v % f.order())));
            v /= f.order();
        }
        c.push_back(f.one());
        out.emplace_back(f, std::move(c));
    }
    return out;
}

// Independent oracle: Laplace expansion along the first row.
Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(m[i][k]);
            }
            minor.push_back(row);
        }
        const Integer term = m[0][j] * laplace_det(minor);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

}  // namespace

TEST_CASE("finite fields: tabulated moduli are irreducible and arithmetic is a field") {
    const std::vector<std::pair<unsigned, unsigned>> fields = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2},
                                                               {3, 3}, {3, 4}, {5, 2}, {7, 2}};
    for (auto [p, k] : fields) {
        const auto mod = conway_modulus(p, k);
        REQUIRE(mod.size() == k + 1);
        const FiniteField base = FiniteField::get(p);
        std::vector<GfElem> c;
        for (auto v : mod) c.push_back(base.element(v));
        const GfPoly m(base, c);
        // brute force: no monic factor of degree <= k/2
        for (int d = 1; d <= static_cast<int>(k) / 2; ++d) {
            for (const auto& g : all_monic(base, d)) CHECK_FALSE((m % g).is_zero());
        }
        const FiniteField f = FiniteField::get(p, k);
        CHECK(f.order() == static_cast<std::uint32_t>(std::pow(p, k)));
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            CHECK(f.mul(f.element(a), f.inv(f.element(a))) == f.one());
            CHECK(f.pow(f.pth_root(f.element(a)), static_cast<std::uint64_t>(p)) == f.element(a));
        }
    }
}

TEST_CASE("finite field distributivity on F_9 and F_16") {
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {2, 4}}) {
        const FiniteField f = FiniteField::get(p, k);
        for (std::uint32_t a = 0; a < f.order(); ++a) {
            for (std::uint32_t b = 0; b < f.order(); b += 3) {
                const auto x = f.element(a), y = f.element(b), z = f.element((a * 7 + b) % f.order());
                CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                CHECK(f.add(f.sub(x, y), y) == x);
            }
        }
    }
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(qpoly("x^2-1"), qpoly("x-1")) == qpoly("x-1"));
    CHECK(poly_gcd(qpoly("3*x^2+6"), Poly<RationalField>(RationalField{})) == qpoly("x^2+2"));
    CHECK(poly_gcd(Poly<RationalField>(RationalField{}), Poly<RationalField>(RationalField{})).is_zero());

    const auto f2 = FiniteField::get(2);
    const auto a = gpoly(f2, {1, 0, 1});  // x^2 + 1
    const auto b = gpoly(f2, {0, 1, 1});  // x^2 + x
    // Oracle: the highest-degree monic common divisor among all monic polys of degree <= 2.
    GfPoly best = GfPoly::constant(f2, f2.one());
    for (int d = 1; d <= 2; ++d) {
        for (const auto& g : all_monic(f2, d)) {
            if ((a % g).is_zero() && (b % g).is_zero()) best = g;
        }
    }
    CHECK(best == gpoly(f2, {1, 1}));
    CHECK(poly_gcd(a, b) == best);
}

TEST_CASE("poly_gcd divides and is divisible by common divisors (random F_q)") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        const auto f = FiniteField::get(p, k);
        for (int trial = 0; trial < 60; ++trial) {
            const auto common = random_gf(f, 3, rng);
            auto a = random_gf(f, 5, rng) * common;
            auto b = random_gf(f, 5, rng) * common;
            if (a.is_zero() || b.is_zero()) continue;
            const auto g = poly_gcd(a, b);
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            CHECK((g % monic(common)).is_zero());
        }
    }
}

TEST_CASE("squarefree_decomposition examples") {
    const auto sq = squarefree_decomposition(qpoly("(x-1)^2*(x+2)"));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].factor == qpoly("x+2"));
    CHECK(sq[0].multiplicity == 1);
    CHECK(sq[1].factor == qpoly("x-1"));
    CHECK(sq[1].multiplicity == 2);

    const auto irr = squarefree_decomposition(qpoly("x^2+1"));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].factor == qpoly("x^2+1"));

    // x^3 - t^3 over F_3(t)
    const FiniteField f3 = FiniteField::get(3);
    const FqPolyRing a(f3);
    const FunctionField k(a);
    const auto t = a.var();
    auto emb = [&](const GfPoly& c) { return k.embed(c); };
    const Poly<FunctionField> f(k, {emb(-(t * t * t)), k.zero(), k.zero(), k.one()});
    const auto d = squarefree_decomposition(f);
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 3);
    CHECK(d[0].factor == Poly<FunctionField>(k, {emb(-t), k.one()}));
}

TEST_CASE("squarefree_decomposition reassembles (char 0 and F_q)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly<RationalField> f = Poly<RationalField>::constant(RationalField{}, Rational(static_cast<long>(rng() % 5 + 1)));
        for (int j = 0; j < 3; ++j) {
            const long r = static_cast<long>(rng() % 7) - 3;
            const unsigned m = static_cast<unsigned>(rng() % 3 + 1);
            for (unsigned i = 0; i < m; ++i) f = f * Poly<RationalField>(RationalField{}, {Rational(r), 1});
        }
        auto parts = squarefree_decomposition(f);
        Poly<RationalField> back = Poly<RationalField>::constant(RationalField{}, f.lc());
        for (const auto& e : parts) {
            CHECK(poly_gcd(e.factor, e.factor.derivative()).degree() == 0);
            for (unsigned i = 0; i < e.multiplicity; ++i) back = back * e.factor;
        }
        CHECK(back == f);
    }
    const auto f5 = FiniteField::get(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_gf(f5, 2, rng);
        auto h = random_gf(f5, 2, rng);
        if (g.is_zero() || h.is_zero()) continue;
        const auto f = g * g * g * g * g * h * h;  // includes a 5th power
        auto parts = squarefree_decomposition(f);
        GfPoly back = GfPoly::constant(f5, f.lc());
        for (const auto& e : parts) {
            for (unsigned i = 0; i < e.multiplicity; ++i) back = back * e.factor;
        }
        CHECK(back == f);
    }
}

TEST_CASE("factor_finite_field examples with exhaustive root oracle") {
    const auto f5 = FiniteField::get(5);
    const auto x2p1 = gpoly(f5, {1, 0, 1});
    std::vector<unsigned> roots;
    for (unsigned r = 0; r < 5; ++r) {
        if (x2p1.eval(f5.element(r)) == f5.zero()) roots.push_back(r);
    }
    CHECK(roots == std::vector<unsigned>{2, 3});
    const auto fac = factor_finite_field(x2p1);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].factor == gpoly(f5, {2, 1}));  // x + 2
    CHECK(fac[1].factor == gpoly(f5, {3, 1}));  // x + 3

    const auto f3 = FiniteField::get(3);
    const auto g3 = gpoly(f3, {1, 0, 1});
    for (unsigned r = 0; r < 3; ++r) CHECK(g3.eval(f3.element(r)) != f3.zero());
    const auto fac3 = factor_finite_field(g3);
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].factor == g3);
    CHECK(fac3[0].multiplicity == 1);

    const auto f2 = FiniteField::get(2);
    const auto fac2 = factor_finite_field(gpoly(f2, {1, 0, 1}));
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].factor == gpoly(f2, {1, 1}));
    CHECK(fac2[0].multiplicity == 2);
}

TEST_CASE("factor_finite_field reassembles 500 random polynomials") {
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<unsigned, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}};
    int checked = 0;
    for (int trial = 0; checked < 500; ++trial) {
        const auto [p, k] = fields[static_cast<std::size_t>(trial) % fields.size()];
        const auto f = FiniteField::get(p, k);
        const auto poly = random_gf(f, 8, rng);
        if (poly.degree() < 1) continue;
        const auto fac = factor_finite_field(poly, static_cast<std::uint64_t>(trial));
        GfPoly back = GfPoly::constant(f, poly.lc());
        for (const auto& e : fac) {
            CHECK(is_irreducible(e.factor));
            CHECK(e.factor.is_monic());
            for (unsigned i = 0; i < e.multiplicity; ++i) back = back * e.factor;
        }
        CHECK(back == poly);
        ++checked;
    }
}

TEST_CASE("factorization is deterministic for a fixed seed") {
    const auto f9 = FiniteField::get(3, 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto poly = random_gf(f9, 8, rng);
        if (poly.degree() < 1) continue;
        const auto a = factor_finite_field(poly, 3);
        const auto b = factor_finite_field(poly, 3);
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j].factor == b[j].factor);
    }
}

TEST_CASE("discriminant examples and Sylvester oracle") {
    CHECK(discriminant(zpoly("x^2+1")) == -4);
    CHECK(discriminant(zpoly("x^3-2")) == -108);
    const auto f = zpoly("x^3 - x^2 - 2*x - 8");
    CHECK(discriminant(f) == -2012);

    // Independent route: Laplace expansion of the 5x5 Sylvester matrix of f, f'
    // (the 6x6 variant with a zero-padded derivative row gives the same value
    // up to the leading coefficient).
    const auto s = sylvester_matrix(f, f.derivative());
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < s.rows(); ++i) rows.push_back(s.row(i));
    const Integer res = laplace_det(rows);
    CHECK(res == resultant(f, f.derivative()));
    CHECK(-res == -2012);  // (-1)^{3} Res / lc with lc = 1
}

TEST_CASE("discriminant vanishes iff f has a repeated factor (char 0)") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> c;
        const int d = static_cast<int>(rng() % 4) + 2;
        for (int i = 0; i < d; ++i) c.push_back(static_cast<long>(rng() % 7) - 3);
        c.push_back(1);
        Poly<IntegerRing> f(IntegerRing{}, c);
        if (trial % 3 == 0) f = f * Poly<IntegerRing>(IntegerRing{}, {Integer(1), Integer(1)}) *
                                Poly<IntegerRing>(IntegerRing{}, {Integer(1), Integer(1)});
        std::vector<Rational> qc;
        for (const auto& v : f.coeffs()) qc.emplace_back(v);
        const Poly<RationalField> fq(RationalField{}, qc);
        const bool repeated = poly_gcd(fq, fq.derivative()).degree() > 0;
        CHECK((discriminant(f) == 0) == repeated);
    }
}

TEST_CASE("parser handles the shared grammar and reports columns") {
    CHECK(zpoly("x^3 - x^2 - 2*x - 8").to_string() == "x^3 - x^2 - 2*x - 8");
    CHECK(zpoly("2x^2 + 3 x - (x+1)^2").to_string() == "x^2 + x - 1");
    CHECK(qpoly("x/5 + 1/2").to_string() == "1/5*x + 1/2");
    CHECK_THROWS_AS(parse_text_poly("x^2 + y"), ParseError);
    try {
        parse_text_poly("x + + ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 7);
    }
    const auto f9 = FiniteField::get(3, 2);
    const auto p = to_fq_t_poly(parse_text_poly("x^2 + a*t*x + t^2 + 1"), f9);
    CHECK(p.to_string() == "x^2 + a*t*x + (t^2 + 1)");
    CHECK_THROWS_AS(to_fq_t_poly(parse_text_poly("x + a"), FiniteField::get(3)), ValidationError);
}
