#include "ramlab/localfield/local_field.hpp"

#include <algorithm>
#include <optional>

#include "ramlab/errors.hpp"

namespace ramlab {

struct CompletionContext::Data {
    Kind kind = Kind::PAdic;
    long n = 0;
    Integer p;
    std::optional<FiniteField> residue;
    std::optional<FiniteField> fq;
    std::optional<GfPoly> pi;
    GfElem iota_gen;
    LocalElement t;
};

namespace {

Integer pow_p(const Integer& p, long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::max(0L, e)));
    return out;
}

LocalElement zero_with(long prec) {
    LocalElement z;
    z.prec = prec;
    return z;
}

// Valuation of a zero element is its precision for the purpose of bounding products.
long effective_val(const LocalElement& a) { return a.is_zero() ? a.prec : a.val; }

}  // namespace

CompletionContext CompletionContext::p_adic(const Integer& p, long precision) {
    if (!is_prime(p)) throw ValidationError("p-adic completion needs a prime, got " + p.get_str());
    if (precision < 4) throw PrecisionTooSmall("completion precision must be at least 4");
    if (p > 65535) throw ValidationError("p-adic residue fields are limited to p < 65536");
    auto d = std::make_shared<Data>();
    d->kind = Kind::PAdic;
    d->n = precision;
    d->p = p;
    d->residue = FiniteField::get(static_cast<std::uint32_t>(p.get_ui()));
    return CompletionContext(std::move(d));
}

CompletionContext CompletionContext::laurent(std::uint32_t p, long precision) {
    const FiniteField fp = FiniteField::get(p);
    return laurent(fp, GfPoly::x(fp), precision);
}

CompletionContext CompletionContext::laurent(const FiniteField& fq, const GfPoly& pi, long precision) {
    if (precision < 4) throw PrecisionTooSmall("completion precision must be at least 4");
    if (!pi.is_monic() || !is_irreducible(pi)) throw ValidationError("prime of F_q[t] must be monic irreducible");
    auto d = std::make_shared<Data>();
    d->kind = Kind::Laurent;
    d->n = precision;
    d->p = fq.p();
    d->fq = fq;
    d->pi = pi;
    const unsigned deg = static_cast<unsigned>(pi.degree());
    GfElem tau;
    if (deg == 1) {
        d->residue = fq;
        d->iota_gen = fq.generator();
        tau = fq.neg(pi.coeff(0));
    } else {
        const unsigned total = fq.degree() * deg;
        double size = 1;
        for (unsigned i = 0; i < total; ++i) size *= fq.p();
        if (size > 65536) throw ValidationError("residue field F_q[t]/(pi) is too large (limit 2^16 elements)");
        const FiniteField big = FiniteField::get(fq.p(), total);
        d->residue = big;
        if (fq.degree() == 1) {
            d->iota_gen = big.zero();
        } else {
            std::vector<GfElem> mod;
            for (auto c : fq.modulus()) mod.push_back(big.from_int(c));
            const GfPoly m(big, mod);
            bool found = false;
            for (std::uint32_t i = 0; i < big.order() && !found; ++i) {
                if (big.is_zero(m.eval(big.element(i)))) {
                    d->iota_gen = big.element(i);
                    found = true;
                }
            }
            if (!found) throw DomainError("no embedding of F_q into the residue field");
        }
    }
    CompletionContext ctx(d);
    if (deg > 1) {
        const FiniteField& big = *d->residue;
        const GfPoly image = pi.map(big, [&](GfElem c) { return ctx.embed_constant(c); });
        bool found = false;
        for (std::uint32_t i = 0; i < big.order() && !found; ++i) {
            if (big.is_zero(image.eval(big.element(i)))) {
                tau = big.element(i);
                found = true;
            }
        }
        if (!found) throw DomainError("prime has no root in its residue field");
    }
    // Newton iteration for pi(T) = u starting at the residue root tau.
    const GfPoly dpi = pi.derivative();
    auto eval = [&](const GfPoly& g, const LocalElement& x) {
        LocalElement acc = ctx.zero();
        for (std::size_t i = g.coeffs().size(); i-- > 0;) {
            acc = ctx.add(ctx.mul(acc, x), ctx.from_residue(ctx.embed_constant(g.coeffs()[i])));
        }
        return acc;
    };
    LocalElement t = ctx.from_residue(tau);
    const LocalElement u = ctx.uniformizer_power(1);
    for (long done = 1; done < 2 * precision; done *= 2) {
        t = ctx.sub(t, ctx.div(ctx.sub(eval(pi, t), u), eval(dpi, t)));
    }
    d->t = t;
    return ctx;
}

CompletionContext::Kind CompletionContext::kind() const noexcept { return d_->kind; }
long CompletionContext::precision() const noexcept { return d_->n; }
const Integer& CompletionContext::prime() const noexcept { return d_->p; }
const FiniteField& CompletionContext::residue_field() const noexcept { return *d_->residue; }

CompletionContext CompletionContext::with_precision(long precision) const {
    if (d_->kind == Kind::PAdic) return p_adic(d_->p, precision);
    return laurent(*d_->fq, *d_->pi, precision);
}

const FiniteField& CompletionContext::base_field() const {
    if (!d_->fq) throw DomainError("p-adic completion has no coefficient field F_q");
    return *d_->fq;
}

const GfPoly& CompletionContext::prime_poly() const {
    if (!d_->pi) throw DomainError("p-adic completion has no prime polynomial");
    return *d_->pi;
}

GfElem CompletionContext::embed_constant(GfElem c) const {
    const FiniteField& fq = base_field();
    const FiniteField& big = *d_->residue;
    if (fq == big) return c;
    const auto dig = fq.digits(c);
    GfElem acc = big.zero();
    GfElem power = big.one();
    for (auto v : dig) {
        acc = big.add(acc, big.mul(big.from_int(v), power));
        power = big.mul(power, d_->iota_gen);
    }
    return acc;
}

const LocalElement& CompletionContext::t_image() const {
    if (d_->kind != Kind::Laurent) throw DomainError("p-adic completion has no variable t");
    return d_->t;
}

std::string CompletionContext::uniformizer() const {
    if (d_->kind == Kind::PAdic) return d_->p.get_str();
    return d_->pi->to_string("t");
}

Integer CompletionContext::characteristic() const { return d_->kind == Kind::PAdic ? Integer(0) : d_->p; }

bool CompletionContext::operator==(const CompletionContext& other) const {
    if (d_ == other.d_) return true;
    if (d_->kind != other.d_->kind || d_->n != other.d_->n || d_->p != other.d_->p) return false;
    if (d_->kind == Kind::PAdic) return true;
    return *d_->fq == *other.d_->fq && *d_->pi == *other.d_->pi;
}

// ---------------------------------------------------------------------------

LocalElement CompletionContext::make_padic(long v, long prec, Integer s) const {
    prec = std::min(prec, d_->n);
    long r = prec - v;
    if (r <= 0) return zero_with(prec);
    const Integer& p = d_->p;
    Integer mod = pow_p(p, r);
    mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
    if (sgn(s) == 0) return zero_with(prec);
    const long k = static_cast<long>(mpz_remove(s.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t()));
    LocalElement out;
    out.val = v + k;
    out.prec = prec;
    if (k > 0) {
        mod = pow_p(p, r - k);
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
    }
    out.unit = std::move(s);
    return out;
}

LocalElement CompletionContext::make_laurent(long v, long prec, std::vector<GfElem> s) const {
    prec = std::min(prec, d_->n);
    const long r = prec - v;
    if (r <= 0) return zero_with(prec);
    if (static_cast<long>(s.size()) > r) s.resize(static_cast<std::size_t>(r));
    std::size_t k = 0;
    while (k < s.size() && s[k].value == 0) ++k;
    if (k == s.size()) return zero_with(prec);
    LocalElement out;
    out.val = v + static_cast<long>(k);
    out.prec = prec;
    s.erase(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    s.resize(static_cast<std::size_t>(r) - k, GfElem{});
    out.digits = std::move(s);
    return out;
}

LocalElement CompletionContext::zero() const { return zero_with(d_->n); }

LocalElement CompletionContext::one() const { return from_int(1); }

LocalElement CompletionContext::from_int(long n) const { return from_integer(Integer(n)); }

LocalElement CompletionContext::from_integer(const Integer& n) const {
    if (d_->kind == Kind::PAdic) return make_padic(0, d_->n, n);
    return from_residue(d_->residue->from_integer(n));
}

LocalElement CompletionContext::from_rational(const Rational& q) const {
    if (d_->kind == Kind::Laurent) {
        const auto& k = *d_->residue;
        const GfElem den = k.from_integer(q.get_den());
        if (k.is_zero(den)) throw DomainError("denominator divisible by the characteristic");
        return from_residue(k.div(k.from_integer(q.get_num()), den));
    }
    Integer den = q.get_den();
    const long vden = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), d_->p.get_mpz_t()));
    if (vden > d_->n) throw PrecisionUnderflow("coefficient valuation below -N");
    const Integer mod = pow_p(d_->p, d_->n + vden);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    return make_padic(-vden, d_->n, Integer(q.get_num() * inv));
}

LocalElement CompletionContext::from_residue(GfElem c) const {
    if (d_->kind == Kind::PAdic) return make_padic(0, d_->n, Integer(c.value));
    return make_laurent(0, d_->n, {c});
}

LocalElement CompletionContext::uniformizer_power(long k) const {
    if (d_->kind == Kind::PAdic) return make_padic(k, d_->n, Integer(1));
    return make_laurent(k, d_->n, {d_->residue->one()});
}

LocalElement CompletionContext::from_series(long val, const std::vector<GfElem>& coeffs, long prec) const {
    if (d_->kind != Kind::Laurent) throw DomainError("series construction needs a Laurent completion");
    return make_laurent(val, prec, coeffs);
}

LocalElement CompletionContext::from_fq_poly(const GfPoly& g) const {
    LocalElement acc = zero();
    for (std::size_t i = g.coeffs().size(); i-- > 0;) {
        acc = add(mul(acc, t_image()), from_residue(embed_constant(g.coeffs()[i])));
    }
    return acc;
}

// ---------------------------------------------------------------------------

LocalElement CompletionContext::add(const Elem& a, const Elem& b) const {
    const long prec = std::min(a.prec, b.prec);
    const long v = std::min(a.val, b.val);
    if (v >= prec) return zero_with(std::min(prec, d_->n));
    if (d_->kind == Kind::PAdic) {
        Integer s = 0;
        if (!a.is_zero()) s += a.unit * pow_p(d_->p, a.val - v);
        if (!b.is_zero()) s += b.unit * pow_p(d_->p, b.val - v);
        return make_padic(v, prec, std::move(s));
    }
    const auto& k = *d_->residue;
    const std::size_t r = static_cast<std::size_t>(prec - v);
    std::vector<GfElem> s(r, k.zero());
    for (const Elem* e : {&a, &b}) {
        if (e->is_zero()) continue;
        const std::size_t off = static_cast<std::size_t>(e->val - v);
        for (std::size_t i = 0; i < e->digits.size() && off + i < r; ++i) s[off + i] = k.add(s[off + i], e->digits[i]);
    }
    return make_laurent(v, prec, std::move(s));
}

LocalElement CompletionContext::neg(const Elem& a) const {
    if (a.is_zero()) return a;
    if (d_->kind == Kind::PAdic) return make_padic(a.val, a.prec, Integer(-a.unit));
    LocalElement out = a;
    for (auto& c : out.digits) c = d_->residue->neg(c);
    return out;
}

LocalElement CompletionContext::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

LocalElement CompletionContext::mul(const Elem& a, const Elem& b) const {
    const long prec = std::min(a.prec + effective_val(b), b.prec + effective_val(a));
    if (a.is_zero() || b.is_zero()) return zero_with(std::min(prec, d_->n));
    const long v = a.val + b.val;
    if (d_->kind == Kind::PAdic) return make_padic(v, prec, Integer(a.unit * b.unit));
    const auto& k = *d_->residue;
    const long capped = std::min(prec, d_->n);
    if (capped <= v) return zero_with(capped);
    const std::size_t r = static_cast<std::size_t>(capped - v);
    std::vector<GfElem> s(r, k.zero());
    for (std::size_t i = 0; i < a.digits.size() && i < r; ++i) {
        if (a.digits[i].value == 0) continue;
        for (std::size_t j = 0; j < b.digits.size() && i + j < r; ++j) {
            s[i + j] = k.add(s[i + j], k.mul(a.digits[i], b.digits[j]));
        }
    }
    return make_laurent(v, capped, std::move(s));
}

LocalElement CompletionContext::inv(const Elem& a) const {
    if (a.is_zero()) throw PrecisionUnderflow("inverse of an element that is zero to precision");
    const long r = a.prec - a.val;
    const long prec = a.prec - 2 * a.val;
    if (d_->kind == Kind::PAdic) {
        Integer out;
        const Integer mod = pow_p(d_->p, r);
        mpz_invert(out.get_mpz_t(), a.unit.get_mpz_t(), mod.get_mpz_t());
        return make_padic(-a.val, prec, std::move(out));
    }
    const auto& k = *d_->residue;
    const std::size_t len = static_cast<std::size_t>(r);
    std::vector<GfElem> b(len, k.zero());
    const GfElem d0 = k.inv(a.digits[0]);
    b[0] = d0;
    for (std::size_t n = 1; n < len; ++n) {
        GfElem acc = k.zero();
        for (std::size_t i = 1; i <= n && i < a.digits.size(); ++i) acc = k.add(acc, k.mul(a.digits[i], b[n - i]));
        b[n] = k.neg(k.mul(d0, acc));
    }
    return make_laurent(-a.val, prec, std::move(b));
}

LocalElement CompletionContext::truncate(const Elem& a, long prec) const {
    if (prec >= a.prec) return a;
    if (a.is_zero() || a.val >= prec) return zero_with(prec);
    if (d_->kind == Kind::PAdic) return make_padic(a.val, prec, a.unit);
    return make_laurent(a.val, prec, a.digits);
}

GfElem CompletionContext::residue(const Elem& a) const {
    const auto& k = *d_->residue;
    if (a.is_zero() || a.val > 0) return k.zero();
    if (a.val < 0) throw DomainError("residue of a non-integral element");
    if (d_->kind == Kind::PAdic) return k.from_integer(a.unit);
    return a.digits[0];
}

GfElem CompletionContext::series_coeff(const Elem& a, long e) const {
    const auto& k = *d_->residue;
    if (e >= a.prec) throw PrecisionUnderflow("coefficient beyond the known precision");
    if (a.is_zero() || e < a.val) return k.zero();
    if (d_->kind == Kind::Laurent) return a.digits[static_cast<std::size_t>(e - a.val)];
    Integer q = a.unit / pow_p(d_->p, e - a.val);
    return k.from_integer(q);
}

LocalElement CompletionContext::derivation(const Elem& a) const {
    if (d_->kind != Kind::Laurent) throw DomainError("the derivation d/du is only defined on Laurent series");
    if (a.is_zero()) return zero_with(a.prec - 1);
    const auto& k = *d_->residue;
    std::vector<GfElem> out;
    out.reserve(a.digits.size());
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        out.push_back(k.mul(k.from_int(a.val + static_cast<long>(i)), a.digits[i]));
    }
    return make_laurent(a.val - 1, a.prec - 1, std::move(out));
}

std::vector<std::string> CompletionContext::digit_strings(const Elem& a) const {
    std::vector<std::string> out;
    if (a.is_zero()) return out;
    if (d_->kind == Kind::PAdic) {
        Integer u = a.unit;
        while (sgn(u) != 0) {
            Integer digit;
            mpz_fdiv_qr(u.get_mpz_t(), digit.get_mpz_t(), u.get_mpz_t(), d_->p.get_mpz_t());
            out.push_back(digit.get_str());
        }
        return out;
    }
    std::size_t last = 0;
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        if (a.digits[i].value != 0) last = i;
    }
    for (std::size_t i = 0; i <= last; ++i) {
        std::string s = d_->residue->to_string(a.digits[i]);
        if (s.find(' ') != std::string::npos) s = "(" + s + ")";
        out.push_back(std::move(s));
    }
    return out;
}

std::string CompletionContext::to_string(const Elem& a) const {
    if (a.is_zero()) return "inf";
    std::string out = std::to_string(a.val) + " |";
    for (const auto& d : digit_strings(a)) out += " " + d;
    return out;
}

}  // namespace ramlab
