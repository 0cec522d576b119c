#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramlab/arith/finite_field.hpp"
#include "ramlab/arith/fraction.hpp"
#include "ramlab/arith/integer.hpp"
#include "ramlab/arith/matrix.hpp"
#include "ramlab/arith/poly.hpp"
#include "ramlab/config.hpp"

namespace ramlab {

using GfPoly = Poly<FiniteField>;
using FqPolyRing = UPolyRing<FiniteField>;
using FunctionField = FractionField<FqPolyRing>;

template <class R>
struct FactorEntry {
    Poly<R> factor;
    unsigned multiplicity;
};

// p-th roots of field elements, where they exist. Characteristic-zero fields
// never need one.
template <class F>
std::optional<typename F::Elem> element_pth_root(const F&, const typename F::Elem&) {
    return std::nullopt;
}
inline std::optional<GfElem> element_pth_root(const FiniteField& f, GfElem a) { return f.pth_root(a); }
std::optional<Poly<FiniteField>> element_pth_root(const FqPolyRing& r, const Poly<FiniteField>& a);
std::optional<FunctionField::Elem> element_pth_root(const FunctionField& f, const FunctionField::Elem& a);

namespace detail {

template <Field F>
bool is_char_zero(const F& field) {
    return sgn(Integer(field.characteristic())) == 0;
}

/// H with F = H(x^p); requires every exponent of F to be a multiple of p.
template <Field F>
Poly<F> contract(const Poly<F>& f, unsigned long p) {
    std::vector<typename F::Elem> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
    return Poly<F>(f.ring(), std::move(out));
}

template <Field F>
void squarefree_char_p(const Poly<F>& f, unsigned long mult, unsigned long p, std::vector<FactorEntry<F>>& out) {
    if (f.degree() <= 0) return;
    auto c = poly_gcd(f, f.derivative());
    auto w = f / c;
    unsigned long i = 1;
    while (w.degree() > 0) {
        auto y = poly_gcd(w, c);
        auto fac = w / y;
        if (fac.degree() > 0) out.push_back({monic(fac), static_cast<unsigned>(i * mult)});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        auto h = contract(c, p);
        std::vector<typename F::Elem> roots;
        for (const auto& a : h.coeffs()) {
            auto r = element_pth_root(f.ring(), a);
            if (!r) throw DomainError("inseparable part has a coefficient without a p-th root");
            roots.push_back(*r);
        }
        squarefree_char_p(Poly<F>(f.ring(), std::move(roots)), mult * p, p, out);
    }
}

}  // namespace detail

/// f = lc(f) * prod g_i^{m_i}, g_i monic squarefree pairwise coprime, m_i
/// distinct; sorted by multiplicity. Characteristic zero uses Yun's
/// algorithm; characteristic p descends through p-th roots.
template <Field F>
std::vector<FactorEntry<F>> squarefree_decomposition(const Poly<F>& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<FactorEntry<F>> out;
    const auto m = monic(f);
    if (detail::is_char_zero(f.ring())) {
        auto fp = m.derivative();
        auto c = poly_gcd(m, fp);
        auto w = m / c;
        auto y = fp / c;
        auto z = y - w.derivative();
        unsigned i = 1;
        while (w.degree() > 0) {
            auto g = poly_gcd(w, z);
            if (g.degree() > 0) out.push_back({g, i});
            w = w / g;
            y = z / g;
            z = y - w.derivative();
            ++i;
        }
    } else {
        const unsigned long p = Integer(f.ring().characteristic()).get_ui();
        detail::squarefree_char_p(m, 1, p, out);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

/// x^e mod m with an arbitrary-size exponent.
template <Field F>
Poly<F> powmod(Poly<F> base, const Integer& e, const Poly<F>& m) {
    Poly<F> result = Poly<F>::constant(m.ring(), m.ring().one()) % m;
    base = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    }
    return result;
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<GfPoly, unsigned>> distinct_degree_factorization(GfPoly f);

/// Complete factorization over F_q into monic irreducibles with
/// multiplicities (distinct-degree then seeded equal-degree splitting).
/// The leading coefficient is dropped; results are sorted by degree and then
/// by coefficients from the constant term up.
std::vector<FactorEntry<FiniteField>> factor_finite_field(const GfPoly& f, std::uint64_t seed = default_seed());

bool is_irreducible(const GfPoly& f);

template <EuclideanRing R>
Matrix<typename R::Elem> sylvester_matrix(const Poly<R>& a, const Poly<R>& b) {
    const auto& r = a.ring();
    const std::size_t m = static_cast<std::size_t>(a.degree());
    const std::size_t n = static_cast<std::size_t>(b.degree());
    Matrix<typename R::Elem> s(m + n, m + n, r.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = a.coeffs()[m - j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = b.coeffs()[n - j];
    }
    return s;
}

/// Res(a, b) as the Sylvester determinant (fraction-free elimination).
template <EuclideanRing R>
typename R::Elem resultant(const Poly<R>& a, const Poly<R>& b) {
    const auto& r = a.ring();
    if (a.is_zero() || b.is_zero()) return r.zero();
    if (a.degree() == 0 && b.degree() == 0) return r.one();
    return determinant(r, sylvester_matrix(a, b));
}

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires deg f >= 1.
template <EuclideanRing R>
typename R::Elem discriminant(const Poly<R>& f) {
    const auto& r = f.ring();
    if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
    const long n = f.degree();
    if (n == 1) return r.one();
    auto res = resultant(f, f.derivative());
    auto [q, rem] = r.divmod(res, f.lc());
    if (!r.is_zero(rem)) throw DomainError("resultant not divisible by the leading coefficient");
    return ((n * (n - 1) / 2) % 2 == 1) ? r.neg(q) : q;
}

}  // namespace ramlab
