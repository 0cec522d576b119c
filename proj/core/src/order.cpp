#include "ramlab/globalorder/order.hpp"

#include <algorithm>

#include "ramlab/errors.hpp"

namespace ramlab {

ResidueMap<IntegerRing>::ResidueMap(IntegerRing ring, Integer p) : ring_(ring), p_(std::move(p)), k_(FiniteField::get(2)) {
    if (p_ < 2 || p_ >= 65536 || !is_prime(p_)) throw ValidationError(p_.get_str() + " is not a prime below 65536");
    k_ = FiniteField::get(static_cast<std::uint32_t>(p_.get_ui()));
}

namespace {

GfElem first_root(const GfPoly& g) {
    for (const auto& fe : factor_finite_field(g)) {
        if (fe.factor.degree() == 1) return g.ring().neg(fe.factor.coeff(0));
    }
    throw DomainError("polynomial has no root in " + std::to_string(g.ring().order()) + " elements");
}

}  // namespace

ResidueMap<FqPolyRing>::ResidueMap(FqPolyRing ring, GfPoly pi)
    : ring_(std::move(ring)), p_(std::move(pi)), k_(ring_.field()), iota_gen_{0}, tau_{0} {
    const FiniteField& fq = ring_.field();
    if (p_.degree() < 1 || !p_.is_monic() || !is_irreducible(p_)) {
        throw ValidationError(p_.to_string("t") + " is not a monic irreducible polynomial");
    }
    const unsigned d = static_cast<unsigned>(p_.degree());
    std::uint64_t size = 1;
    for (unsigned i = 0; i < d; ++i) size *= fq.order();
    if (size > 65536) throw ValidationError("residue field of " + p_.to_string("t") + " exceeds 2^16 elements");
    if (d == 1) {
        iota_gen_ = fq.generator();
        tau_ = fq.neg(p_.coeff(0));
    } else {
        k_ = FiniteField::get(fq.p(), fq.degree() * d);
        std::vector<GfElem> mod;
        for (auto c : fq.modulus()) mod.push_back(k_.from_int(static_cast<long>(c)));
        iota_gen_ = first_root(GfPoly(k_, mod));
        std::vector<GfElem> image;
        for (const auto& c : p_.coeffs()) image.push_back(embed_constant(c));
        tau_ = first_root(GfPoly(k_, image));
    }
    lifts_.assign(size, GfPoly(fq));
    std::vector<GfElem> coeffs(d, fq.zero());
    for (std::uint64_t code = 0; code < size; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i) {
            coeffs[i] = fq.element(static_cast<std::uint32_t>(c % fq.order()));
            c /= fq.order();
        }
        GfPoly g(fq, coeffs);
        const GfElem r = reduce(g);
        lifts_[r.value] = std::move(g);
    }
}

GfElem ResidueMap<FqPolyRing>::embed_constant(GfElem c) const {
    if (k_ == ring_.field()) return c;
    const auto digits = ring_.field().digits(c);
    GfElem acc = k_.zero();
    for (std::size_t i = digits.size(); i-- > 0;) acc = k_.add(k_.mul(acc, iota_gen_), k_.from_int(digits[i]));
    return acc;
}

GfElem ResidueMap<FqPolyRing>::reduce(const GfPoly& a) const {
    GfElem acc = k_.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = k_.add(k_.mul(acc, tau_), embed_constant(a.coeffs()[i]));
    return acc;
}

std::vector<GfElem> QuotientAlgebra::mul(const std::vector<GfElem>& a, const std::vector<GfElem>& b) const {
    std::vector<GfElem> out(dim, field.zero());
    for (std::size_t i = 0; i < dim; ++i) {
        if (field.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (field.is_zero(b[j])) continue;
            const GfElem c = field.mul(a[i], b[j]);
            const auto& t = table[i][j];
            for (std::size_t k = 0; k < dim; ++k) out[k] = field.add(out[k], field.mul(c, t[k]));
        }
    }
    return out;
}

std::vector<GfElem> QuotientAlgebra::pow(std::vector<GfElem> a, const Integer& e) const {
    std::vector<GfElem> result = one;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mul(result, a);
        k >>= 1;
        if (k > 0) a = mul(a, a);
    }
    return result;
}

namespace {

template <class R>
using El = typename R::Elem;

template <class R>
using Vec = std::vector<El<R>>;

using KVec = std::vector<GfElem>;

template <class R>
ResidueMap<R> residue_map(const R& ring, const El<R>& p);

template <>
ResidueMap<IntegerRing> residue_map(const IntegerRing& ring, const Integer& p) {
    return ResidueMap<IntegerRing>(ring, p);
}

template <>
ResidueMap<FqPolyRing> residue_map(const FqPolyRing& ring, const GfPoly& p) {
    return ResidueMap<FqPolyRing>(ring, p);
}

template <class R>
El<R> exact_quotient(const R& ring, const El<R>& a, const El<R>& b) {
    auto [q, r] = ring.divmod(a, b);
    if (!ring.is_zero(r)) throw DomainError("inexact division in the base ring");
    return q;
}

template <class R>
bool divides(const R& ring, const El<R>& d, const El<R>& a) {
    return ring.is_zero(ring.divmod(a, d).second);
}

// a * b mod f in theta-coordinates, f monic of degree n.
template <class R>
Vec<R> mulmod(const R& ring, const Poly<R>& f, const Vec<R>& a, const Vec<R>& b) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Vec<R> prod(2 * n - 1, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (ring.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = ring.add(prod[i + j], ring.mul(a[i], b[j]));
    }
    for (std::size_t d = prod.size(); d-- > n;) {
        if (ring.is_zero(prod[d])) continue;
        const El<R> c = prod[d];
        for (std::size_t i = 0; i <= n; ++i) prod[d - n + i] = ring.sub(prod[d - n + i], ring.mul(c, f.coeff(i)));
    }
    prod.erase(prod.begin() + static_cast<std::ptrdiff_t>(n), prod.end());
    return prod;
}

// Coordinates in the basis rows of M (over the denominator D) of the
// theta-coordinate numerator v over den.
template <class R>
Vec<R> coordinates(const R& ring, const Matrix<El<R>>& m, const El<R>& d, Vec<R> v, const El<R>& den) {
    for (auto& c : v) c = exact_quotient(ring, ring.mul(c, d), den);
    auto out = solve_lower(ring, m, v);
    if (!out) throw DomainError("element lies outside the order");
    return *out;
}

template <class R>
struct Table {
    std::vector<std::vector<Vec<R>>> t;
};

template <class R>
Table<R> multiplication_table(const R& ring, const Poly<R>& f, const Matrix<El<R>>& m, const El<R>& d) {
    const std::size_t n = m.rows();
    Table<R> out;
    out.t.assign(n, std::vector<Vec<R>>(n));
    const El<R> d2 = ring.mul(d, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto c = coordinates(ring, m, d, mulmod(ring, f, m.row(i), m.row(j)), d2);
            out.t[i][j] = c;
            out.t[j][i] = std::move(c);
        }
    }
    return out;
}

template <class R>
Vec<R> theta_numerator(const R& ring, const Poly<R>& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Vec<R> v(n, ring.zero());
    if (n >= 2)
        v[1] = ring.one();
    else
        v[0] = ring.neg(f.coeff(0));
    return v;
}

template <class R>
Vec<R> one_numerator(const R& ring, std::size_t n) {
    Vec<R> v(n, ring.zero());
    v[0] = ring.one();
    return v;
}

template <class R>
QuotientAlgebra reduce_algebra(const R& ring, const ResidueMap<R>& res, const Table<R>& tab, const Matrix<El<R>>& m,
                               const El<R>& d) {
    const std::size_t n = m.rows();
    QuotientAlgebra a{res.field(), n, {}, {}};
    a.table.assign(n, std::vector<KVec>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& c : tab.t[i][j]) a.table[i][j].push_back(res.reduce(c));
        }
    }
    for (const auto& c : coordinates(ring, m, d, one_numerator(ring, n), ring.one())) a.one.push_back(res.reduce(c));
    return a;
}

std::vector<KVec> transpose(const std::vector<KVec>& rows, std::size_t n) {
    std::vector<KVec> out(n, KVec(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) out[j][i] = rows[i][j];
    }
    return out;
}

std::vector<KVec> matmul(const FiniteField& k, const std::vector<KVec>& a, const std::vector<KVec>& b) {
    const std::size_t n = a.size();
    std::vector<KVec> out(n, KVec(n, k.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (k.is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] = k.add(out[i][j], k.mul(a[i][l], b[l][j]));
        }
    }
    return out;
}

KVec unit_vector(const FiniteField& k, std::size_t n, std::size_t i) {
    KVec v(n, k.zero());
    v[i] = k.one();
    return v;
}

// Rows F with b_i^q = sum_j F[i][j] b_j, q = |k|; the map is k-linear.
std::vector<KVec> frobenius_matrix(const QuotientAlgebra& a) {
    std::vector<KVec> rows;
    const Integer q = a.field.order();
    for (std::size_t i = 0; i < a.dim; ++i) rows.push_back(a.pow(unit_vector(a.field, a.dim, i), q));
    return rows;
}

// {x : x * F == 0} for the row-vector convention.
std::vector<KVec> left_kernel(const FiniteField& k, const std::vector<KVec>& f) {
    return kernel(k, transpose(f, f.size()), f.size());
}

std::vector<KVec> jacobson_radical(const QuotientAlgebra& a) {
    const auto& k = a.field;
    const auto f = frobenius_matrix(a);
    auto g = f;
    Integer reach = k.order();
    while (reach < static_cast<long>(a.dim)) {
        g = matmul(k, g, f);
        reach *= k.order();
    }
    return row_reduce(k, left_kernel(k, g), a.dim);
}

// Minimal polynomial of y over k in the algebra with unit `unit`, modulo
// the span of `ideal` (row reduced).
GfPoly minimal_polynomial(const QuotientAlgebra& a, const KVec& y, const KVec& unit, const std::vector<KVec>& ideal) {
    const auto& k = a.field;
    std::vector<KVec> powers{unit};
    for (std::size_t d = 1; d <= a.dim + 1; ++d) {
        powers.push_back(a.mul(powers.back(), y));
        const std::size_t cols = powers.size() + ideal.size();
        std::vector<KVec> rows(a.dim, KVec(cols, k.zero()));
        for (std::size_t r = 0; r < a.dim; ++r) {
            for (std::size_t c = 0; c < powers.size(); ++c) rows[r][c] = powers[c][r];
            for (std::size_t c = 0; c < ideal.size(); ++c) rows[r][powers.size() + c] = ideal[c][r];
        }
        for (const auto& v : kernel(k, rows, cols)) {
            if (k.is_zero(v[d])) continue;
            const GfElem inv = k.inv(v[d]);
            KVec coeffs;
            for (std::size_t c = 0; c <= d; ++c) coeffs.push_back(k.mul(v[c], inv));
            return GfPoly(k, coeffs);
        }
    }
    throw DomainError("minimal polynomial not found");
}

std::vector<KVec> primitive_idempotents(const QuotientAlgebra& a) {
    const auto& k = a.field;
    std::vector<KVec> shifted = frobenius_matrix(a);
    for (std::size_t i = 0; i < a.dim; ++i) shifted[i][i] = k.sub(shifted[i][i], k.one());
    const auto fixed = left_kernel(k, shifted);
    std::vector<KVec> idems{a.one};
    for (const auto& x : fixed) {
        std::vector<KVec> next;
        for (const auto& e : idems) {
            const KVec y = a.mul(e, x);
            const GfPoly mp = minimal_polynomial(a, y, e, {});
            std::vector<GfElem> roots;
            for (const auto& fe : factor_finite_field(mp)) {
                if (fe.factor.degree() != 1 || fe.multiplicity != 1) throw DomainError("fixed subalgebra is not split");
                roots.push_back(k.neg(fe.factor.coeff(0)));
            }
            if (roots.size() == 1) {
                next.push_back(e);
                continue;
            }
            for (const auto& c : roots) {
                KVec proj = e;
                for (const auto& c2 : roots) {
                    if (c2 == c) continue;
                    KVec factor = y;
                    const GfElem s = k.inv(k.sub(c, c2));
                    for (std::size_t i = 0; i < a.dim; ++i) {
                        factor[i] = k.mul(k.sub(factor[i], k.mul(c2, e[i])), s);
                    }
                    proj = a.mul(proj, factor);
                }
                next.push_back(std::move(proj));
            }
        }
        idems = std::move(next);
    }
    return idems;
}

template <class R>
Matrix<El<R>> hermite_full(const R& ring, const std::vector<Vec<R>>& gens, std::size_t n) {
    auto h = hermite_rows(ring, gens, n);
    if (h.rows() != n) throw DomainError("lattice lost rank");
    return h;
}

template <class R>
std::vector<Vec<R>> lifted_with_p(const R& ring, const ResidueMap<R>& res, const std::vector<KVec>& vs, std::size_t n) {
    std::vector<Vec<R>> gens;
    for (const auto& v : vs) {
        Vec<R> g;
        for (const auto& c : v) g.push_back(res.lift(c));
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec<R> g(n, ring.zero());
        g[i] = res.prime();
        gens.push_back(std::move(g));
    }
    return gens;
}

// One enlargement step; false when the order is already p-maximal.
template <class R>
bool enlarge(const EquationOrder<R>& eo, const ResidueMap<R>& res, Matrix<El<R>>& m, El<R>& d) {
    const R& ring = eo.ring;
    const std::size_t n = m.rows();
    const auto tab = multiplication_table(ring, eo.f, m, d);
    const auto alg = reduce_algebra(ring, res, tab, m, d);
    const auto& k = alg.field;
    const auto rad = jacobson_radical(alg);
    const auto ideal = hermite_full(ring, lifted_with_p(ring, res, rad, n), n);
    // Matrix of y -> b_i y on I/pI, flattened, one column per i.
    std::vector<KVec> rows(n * n, KVec(n, k.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            Vec<R> prod(n, ring.zero());
            for (std::size_t l = 0; l < n; ++l) {
                if (ring.is_zero(ideal(r, l))) continue;
                for (std::size_t c = 0; c < n; ++c) prod[c] = ring.add(prod[c], ring.mul(ideal(r, l), tab.t[i][l][c]));
            }
            auto coords = solve_lower(ring, ideal, prod);
            if (!coords) throw DomainError("radical is not an ideal");
            for (std::size_t c = 0; c < n; ++c) rows[r * n + c][i] = res.reduce((*coords)[c]);
        }
    }
    const auto ker = kernel(k, rows, n);
    if (ker.empty()) return false;
    const auto u = hermite_full(ring, lifted_with_p(ring, res, ker, n), n);
    // New basis (u * m) / (p d) in theta-coordinates.
    std::vector<Vec<R>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<R> row(n, ring.zero());
        for (std::size_t l = 0; l < n; ++l) {
            if (ring.is_zero(u(i, l))) continue;
            for (std::size_t c = 0; c < n; ++c) row[c] = ring.add(row[c], ring.mul(u(i, l), m(l, c)));
        }
        gens.push_back(std::move(row));
    }
    m = hermite_full(ring, gens, n);
    d = ring.mul(d, res.prime());
    while (!ring.equal(d, ring.one())) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) {
            for (std::size_t c = 0; c < n && all; ++c) all = divides(ring, res.prime(), m(i, c));
        }
        if (!all) break;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < n; ++c) m(i, c) = exact_quotient(ring, m(i, c), res.prime());
        }
        d = exact_quotient(ring, d, res.prime());
    }
    return true;
}

template <class R>
LocalMaximalOrder<R> run_round2(LocalMaximalOrder<R> o) {
    const auto res = residue_map(o.order.ring, o.prime);
    const std::size_t limit = 64 * o.order.degree() + 64;
    while (enlarge(o.order, res, o.basis, o.denominator)) {
        if (++o.rounds > limit) throw DomainError("Round 2 did not stabilize");
    }
    return o;
}

template <class R>
Poly<R> lift_poly(const R& ring, const ResidueMap<R>& res, const GfPoly& g) {
    Vec<R> out;
    for (const auto& c : g.coeffs()) out.push_back(res.lift(c));
    return Poly<R>(ring, std::move(out));
}

template <class R>
GfPoly reduce_poly(const ResidueMap<R>& res, const Poly<R>& f) {
    std::vector<GfElem> out;
    for (const auto& c : f.coeffs()) out.push_back(res.reduce(c));
    return GfPoly(res.field(), std::move(out));
}

}  // namespace

template <class R>
EquationOrder<R> equation_order(const Poly<R>& f) {
    if (f.degree() < 1) throw ValidationError("defining polynomial must have positive degree");
    if (!f.is_monic()) throw ValidationError("defining polynomial must be monic");
    const auto& ring = f.ring();
    if (f.derivative().is_zero()) {
        std::size_t terms = 0;
        for (const auto& c : f.coeffs()) terms += ring.is_zero(c) ? 0 : 1;
        const Integer p = ring.characteristic();
        Integer m = f.degree();
        while (m > 1 && mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
        if (terms != 2 || m != 1 || ring.is_zero(f.coeff(0))) {
            throw ValidationError("inseparable defining polynomials must have the form x^(p^k) - a");
        }
    } else if (f.degree() > 1 && ring.is_zero(discriminant(f))) {
        throw NonSquarefreeInput("defining polynomial has a repeated factor");
    }
    return EquationOrder<R>{ring, f};
}

template <class R>
DedekindResult dedekind_criterion(const EquationOrder<R>& order, const El<R>& p) {
    const auto res = residue_map(order.ring, p);
    const auto& ring = order.ring;
    const auto& k = res.field();
    const GfPoly fbar = reduce_poly(res, order.f);
    GfPoly gbar = GfPoly::constant(k, k.one());
    GfPoly hbar = GfPoly::constant(k, k.one());
    for (const auto& fe : factor_finite_field(fbar)) {
        gbar *= fe.factor;
        for (unsigned i = 1; i < fe.multiplicity; ++i) hbar *= fe.factor;
    }
    const Poly<R> g = lift_poly(ring, res, gbar);
    const Poly<R> h = lift_poly(ring, res, hbar);
    const Poly<R> diff = order.f - g * h;
    Vec<R> big;
    for (const auto& c : diff.coeffs()) big.push_back(exact_quotient(ring, c, p));
    const GfPoly fbig = reduce_poly(res, Poly<R>(ring, big));
    const GfPoly z = monic(poly_gcd(poly_gcd(fbig, gbar), hbar));
    return {z.degree() == 0, z};
}

template <class R>
LocalMaximalOrder<R> round2_pmaximal(const EquationOrder<R>& order, const El<R>& p) {
    const auto& ring = order.ring;
    const std::size_t n = order.degree();
    Matrix<El<R>> id(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) id(i, i) = ring.one();
    return run_round2(LocalMaximalOrder<R>{order, p, id, ring.one(), 0});
}

template <class R>
LocalMaximalOrder<R> round2_pmaximal(const LocalMaximalOrder<R>& start) {
    LocalMaximalOrder<R> o = start;
    o.rounds = 0;
    return run_round2(std::move(o));
}

template <class R>
std::string LocalMaximalOrder<R>::basis_string(std::size_t i) const {
    const auto& ring = order.ring;
    Vec<R> row = basis.row(i);
    El<R> g = denominator;
    for (const auto& c : row) g = ring_gcd(ring, g, c);
    El<R> den = exact_quotient(ring, denominator, g);
    const El<R> u = ring.normalizer(den);
    den = ring.mul(den, u);
    for (auto& c : row) c = ring.mul(exact_quotient(ring, c, g), u);
    const std::string num = Poly<R>(ring, row).to_string("θ");
    if (ring.equal(den, ring.one())) return num;
    const std::string ds = ring.to_string(den);
    const std::string wrapped = num.find(' ') == std::string::npos ? num : "(" + num + ")";
    return wrapped + "/" + (ds.find(' ') == std::string::npos ? ds : "(" + ds + ")");
}

template <class R>
El<R> LocalMaximalOrder<R>::index() const {
    const auto& ring = order.ring;
    El<R> num = ring.one();
    El<R> diag = ring.one();
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        num = ring.mul(num, denominator);
        diag = ring.mul(diag, basis(i, i));
    }
    El<R> q = exact_quotient(ring, num, diag);
    return ring.mul(q, ring.normalizer(q));
}

template <class R>
QuotientAlgebra quotient_algebra(const LocalMaximalOrder<R>& o) {
    const auto res = residue_map(o.order.ring, o.prime);
    const auto tab = multiplication_table(o.order.ring, o.order.f, o.basis, o.denominator);
    return reduce_algebra(o.order.ring, res, tab, o.basis, o.denominator);
}

template <class R>
std::vector<RamifiedPrime> decompose_prime(const LocalMaximalOrder<R>& o) {
    const auto& ring = o.order.ring;
    const auto res = residue_map(ring, o.prime);
    const auto alg = quotient_algebra(o);
    const auto& k = alg.field;
    const std::size_t n = alg.dim;
    const auto rad = jacobson_radical(alg);
    KVec theta;
    for (const auto& c : coordinates(ring, o.basis, o.denominator, theta_numerator(ring, o.order.f), ring.one())) {
        theta.push_back(res.reduce(c));
    }
    std::vector<RamifiedPrime> out;
    for (const auto& e : primitive_idempotents(alg)) {
        std::vector<KVec> block;
        for (std::size_t j = 0; j < n; ++j) block.push_back(alg.mul(e, unit_vector(k, n, j)));
        const long dim_block = static_cast<long>(rank(k, block, n));
        std::vector<KVec> maximal;
        for (const auto& r : rad) maximal.push_back(alg.mul(e, r));
        maximal = row_reduce(k, maximal, n);
        const long f = dim_block - static_cast<long>(maximal.size());
        long length = 1;
        for (auto power = maximal; !power.empty(); ++length) {
            std::vector<KVec> next;
            for (const auto& x : power) {
                for (const auto& y : maximal) next.push_back(alg.mul(x, y));
            }
            power = row_reduce(k, next, n);
        }
        if (f <= 0 || length * f != dim_block) throw DomainError("local component is not a chain ring");
        out.push_back({length, f, minimal_polynomial(alg, alg.mul(e, theta), e, maximal), e});
    }
    std::sort(out.begin(), out.end(), [](const RamifiedPrime& a, const RamifiedPrime& b) {
        if (a.e != b.e) return a.e > b.e;
        if (a.f != b.f) return a.f > b.f;
        return a.residue_poly.to_string() < b.residue_poly.to_string();
    });
    return out;
}

template <class R>
long dim_quotient_mod_p(const LocalMaximalOrder<R>& o) {
    const auto alg = quotient_algebra(o);
    std::vector<KVec> rows;
    for (std::size_t i = 0; i < alg.dim; ++i) rows.push_back(alg.mul(alg.one, unit_vector(alg.field, alg.dim, i)));
    return static_cast<long>(rank(alg.field, rows, alg.dim));
}

#define RAMLAB_INSTANTIATE_ORDER(R)                                                                 \
    template EquationOrder<R> equation_order<R>(const Poly<R>&);                                    \
    template DedekindResult dedekind_criterion<R>(const EquationOrder<R>&, const R::Elem&);          \
    template LocalMaximalOrder<R> round2_pmaximal<R>(const EquationOrder<R>&, const R::Elem&);       \
    template LocalMaximalOrder<R> round2_pmaximal<R>(const LocalMaximalOrder<R>&);                  \
    template struct LocalMaximalOrder<R>;                                                           \
    template QuotientAlgebra quotient_algebra<R>(const LocalMaximalOrder<R>&);                      \
    template std::vector<RamifiedPrime> decompose_prime<R>(const LocalMaximalOrder<R>&);            \
    template long dim_quotient_mod_p<R>(const LocalMaximalOrder<R>&);

RAMLAB_INSTANTIATE_ORDER(IntegerRing)
RAMLAB_INSTANTIATE_ORDER(FqPolyRing)

#undef RAMLAB_INSTANTIATE_ORDER

}  // namespace ramlab
