#include "ramlab/identity/identity.hpp"

#include "ramlab/errors.hpp"
#include "ramlab/localfield/local_poly.hpp"
#include "ramlab/valgroup/ordered_group.hpp"

namespace ramlab {

namespace {

// Degrees d such that some product of the given factor degrees has degree d.
std::vector<bool> subset_degrees(const std::vector<int>& degrees, std::size_t n) {
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (int d : degrees) {
        for (std::size_t s = n + 1; s-- > static_cast<std::size_t>(d);) {
            if (reach[s - static_cast<std::size_t>(d)]) reach[s] = true;
        }
    }
    return reach;
}

// Intersects the factor-degree sums of f mod successive primes; true once
// only 0 and n survive.
class DegreeScreen {
   public:
    explicit DegreeScreen(std::size_t n) : n_(n), possible_(n + 1, true) {}

    bool add(const GfPoly& fbar) {
        std::vector<int> degrees;
        for (const auto& fe : factor_finite_field(fbar)) {
            for (unsigned i = 0; i < fe.multiplicity; ++i) degrees.push_back(fe.factor.degree());
        }
        const auto reach = subset_degrees(degrees, n_);
        std::size_t alive = 0;
        for (std::size_t d = 0; d <= n_; ++d) {
            possible_[d] = possible_[d] && reach[d];
            alive += possible_[d] ? 1 : 0;
        }
        return alive == 2;
    }

   private:
    std::size_t n_;
    std::vector<bool> possible_;
};

long valuation_at(const GfPoly& a, const GfPoly& pi) {
    if (a.is_zero()) return 0;
    long v = 0;
    GfPoly r = a;
    while (true) {
        auto [q, rem] = divmod(r, pi);
        if (!rem.is_zero()) return v;
        r = q;
        ++v;
    }
}

CompletionContext completion(const IntegerRing&, const Integer& p, long n) { return CompletionContext::p_adic(p, n); }

CompletionContext completion(const FqPolyRing& ring, const GfPoly& pi, long n) {
    return CompletionContext::laurent(ring.field(), pi, n);
}

long disc_valuation(const Poly<IntegerRing>& f, const Integer& p) {
    if (f.degree() < 2) return 0;
    const Integer d = discriminant(f);
    return d == 0 ? 0 : valuation(d, p);
}

long disc_valuation(const Poly<FqPolyRing>& f, const GfPoly& pi) {
    if (f.degree() < 2 || f.derivative().is_zero()) return 0;
    return valuation_at(discriminant(f), pi);
}

// Monic polynomials of degree d over fq, in lexicographic order.
std::vector<GfPoly> monic_of_degree(const FiniteField& fq, unsigned d) {
    std::vector<GfPoly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= fq.order();
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<GfElem> c;
        std::uint64_t x = code;
        for (unsigned i = 0; i < d; ++i) {
            c.push_back(fq.element(static_cast<std::uint32_t>(x % fq.order())));
            x /= fq.order();
        }
        c.push_back(fq.one());
        out.emplace_back(fq, c);
    }
    return out;
}

}  // namespace

template <class R>
std::pair<long, std::vector<RamifiedPrime>> lhs_sum(const Poly<R>& f, const typename R::Elem& p) {
    const auto o = round2_pmaximal(equation_order(f), p);
    auto primes = decompose_prime(o);
    long sum = 0;
    for (const auto& P : primes) sum += P.e * P.f;
    return {sum, std::move(primes)};
}

template <class R>
RhsResult rhs_dim(const Poly<R>& f, const typename R::Elem& p, long precision) {
    if (precision < 4) throw PrecisionTooSmall("precision must be at least 4");
    const CompletionContext ctx = completion(f.ring(), p, precision);
    const long start = 2 * disc_valuation(f, p) + 8;
    const RadicalResult r = radical_degree_doubling([&](const CompletionContext& c) { return embed(f, c); }, ctx, start);
    return {r.degree, r.certified, r.radical.ring().precision()};
}

template <>
bool irreducibility_witnessed(const Poly<IntegerRing>& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (n <= 1) return true;
    const Integer disc = discriminant(f);
    if (disc == 0) return false;
    DegreeScreen screen(n);
    int used = 0;
    for (unsigned long ell = 2; ell < 400 && used < 40; ++ell) {
        if (!is_prime(Integer(ell)) || mpz_divisible_ui_p(disc.get_mpz_t(), ell) != 0) continue;
        ++used;
        const auto k = FiniteField::get(static_cast<std::uint32_t>(ell));
        if (screen.add(f.map(k, [&](const Integer& c) { return k.from_integer(c); }))) return true;
    }
    return false;
}

template <>
bool irreducibility_witnessed(const Poly<FqPolyRing>& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (n <= 1) return true;
    const auto& ring = f.ring();
    if (f.derivative().is_zero()) {
        // x^(p^k) - a is irreducible exactly when a is not a p-th power.
        return !element_pth_root(ring, ring.neg(f.coeff(0))).has_value();
    }
    const GfPoly disc = discriminant(f);
    if (disc.is_zero()) return false;
    const auto& fq = ring.field();
    DegreeScreen screen(n);
    int used = 0;
    for (unsigned d = 1; d <= 3 && used < 40; ++d) {
        std::uint64_t size = 1;
        for (unsigned i = 0; i < d; ++i) size *= fq.order();
        if (size > 4096) break;
        for (const auto& pi : monic_of_degree(fq, d)) {
            if (used >= 40) break;
            if (!is_irreducible(pi) || divmod(disc, pi).second.is_zero()) continue;
            ++used;
            const ResidueMap<FqPolyRing> res(ring, pi);
            if (screen.add(f.map(res.field(), [&](const GfPoly& a) { return res.reduce(a); }))) return true;
        }
    }
    return false;
}

template <class R>
IdentityReport check_identity(const Poly<R>& f, const typename R::Elem& p, long precision) {
    IdentityReport rep;
    const auto eo = equation_order(f);
    rep.degree = static_cast<long>(eo.degree());
    const auto o = round2_pmaximal(eo, p);
    for (std::size_t i = 0; i < o.basis.rows(); ++i) rep.order_basis.push_back(o.basis_string(i));
    rep.primes = decompose_prime(o);
    for (const auto& P : rep.primes) rep.lhs += P.e * P.f;
    const RhsResult rhs = rhs_dim(f, p, precision);
    rep.rhs = rhs.dim;
    rep.certified = rhs.certified;
    rep.precision_used = rhs.precision;
    rep.radical_dim = rep.degree - rep.rhs;
    rep.eq11 = rep.lhs == rep.rhs;
    rep.classical = rep.lhs == rep.degree;
    rep.inequality = rep.lhs <= rep.degree && rep.rhs <= rep.degree;
    rep.e5_c = dim_quotient_mod_p(o) == rep.degree;
    // Discrete value groups: eps(Z, eZ) = e.
    const auto z = OrderedGroup::lex(1);
    long eps_sum = 0;
    for (const auto& P : rep.primes) {
        const auto eps = initial_index(z, FiniteIndexSubgroup(z, {GroupElement{Integer(P.e)}})).epsilon;
        eps_sum += eps.get_si() * P.f;
    }
    rep.e5_d = eps_sum == rep.degree;
    rep.semisimple = rep.radical_dim == 0;
    if (!irreducibility_witnessed(f)) rep.caveats.emplace_back(kIrreducibilityCaveat);
    return rep;
}

template std::pair<long, std::vector<RamifiedPrime>> lhs_sum<IntegerRing>(const Poly<IntegerRing>&, const Integer&);
template std::pair<long, std::vector<RamifiedPrime>> lhs_sum<FqPolyRing>(const Poly<FqPolyRing>&, const GfPoly&);
template RhsResult rhs_dim<IntegerRing>(const Poly<IntegerRing>&, const Integer&, long);
template RhsResult rhs_dim<FqPolyRing>(const Poly<FqPolyRing>&, const GfPoly&, long);
template IdentityReport check_identity<IntegerRing>(const Poly<IntegerRing>&, const Integer&, long);
template IdentityReport check_identity<FqPolyRing>(const Poly<FqPolyRing>&, const GfPoly&, long);

}  // namespace ramlab
