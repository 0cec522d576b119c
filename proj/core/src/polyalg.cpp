#include "ramlab/arith/polyalg.hpp"

#include <algorithm>
#include <random>

namespace ramlab {

std::optional<Poly<FiniteField>> element_pth_root(const FqPolyRing& r, const Poly<FiniteField>& a) {
    const auto& field = r.field();
    const std::size_t p = field.p();
    std::vector<GfElem> out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i % p != 0) {
            if (!field.is_zero(a.coeffs()[i])) return std::nullopt;
            continue;
        }
        out.push_back(field.pth_root(a.coeffs()[i]));
    }
    return Poly<FiniteField>(field, std::move(out));
}

std::optional<FunctionField::Elem> element_pth_root(const FunctionField& f, const FunctionField::Elem& a) {
    auto num = element_pth_root(f.base(), a.num);
    auto den = element_pth_root(f.base(), a.den);
    if (!num || !den) return std::nullopt;
    return f.make(*num, *den);
}

std::vector<std::pair<GfPoly, unsigned>> distinct_degree_factorization(GfPoly f) {
    std::vector<std::pair<GfPoly, unsigned>> out;
    const auto& field = f.ring();
    const auto x = GfPoly::x(field);
    const Integer q = field.order();
    GfPoly h = x % f;
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = powmod(h, q, f);
        auto g = poly_gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

namespace {

GfPoly random_poly(const FiniteField& field, int degree_bound, std::mt19937_64& rng) {
    std::vector<GfElem> c;
    for (int i = 0; i < degree_bound; ++i) c.push_back(field.element(static_cast<std::uint32_t>(rng() % field.order())));
    return GfPoly(field, std::move(c));
}

void equal_degree_split(const GfPoly& f, unsigned d, std::mt19937_64& rng, std::vector<GfPoly>& out) {
    if (f.degree() <= static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    const auto& field = f.ring();
    const Integer q = field.order();
    Integer qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    while (true) {
        GfPoly a = random_poly(field, f.degree(), rng);
        if (a.degree() < 1) continue;
        GfPoly b(field);
        if (field.p() == 2) {
            // Absolute trace to F_2: a + a^2 + ... + a^{2^{kd-1}}.
            GfPoly term = a % f;
            b = term;
            for (unsigned i = 1; i < field.degree() * d; ++i) {
                term = (term * term) % f;
                b = b + term;
            }
        } else {
            b = powmod(a, Integer((qd - 1) / 2), f) - GfPoly::constant(field, field.one());
        }
        auto g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

bool canonical_less(const FactorEntry<FiniteField>& a, const FactorEntry<FiniteField>& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<FactorEntry<FiniteField>> factor_finite_field(const GfPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<FactorEntry<FiniteField>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [block, d] : distinct_degree_factorization(part)) {
            std::vector<GfPoly> irreducibles;
            equal_degree_split(block, d, rng, irreducibles);
            for (auto& g : irreducibles) out.push_back({monic(g), mult});
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool is_irreducible(const GfPoly& f) {
    if (f.degree() < 1) return false;
    auto m = monic(f);
    if (poly_gcd(m, m.derivative()).degree() != 0) return false;
    auto ddf = distinct_degree_factorization(m);
    return ddf.size() == 1 && static_cast<int>(ddf.front().second) == m.degree();
}

}  // namespace ramlab
