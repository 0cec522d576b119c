#include "ramlab/localfield/local_poly.hpp"

#include <algorithm>

namespace ramlab {

LocalPolynomial embed(const Poly<IntegerRing>& f, const CompletionContext& ctx) {
    return f.map(ctx, [&](const Integer& c) { return ctx.from_integer(c); });
}

LocalPolynomial embed(const Poly<RationalField>& f, const CompletionContext& ctx) {
    return f.map(ctx, [&](const Rational& c) { return ctx.from_rational(c); });
}

LocalPolynomial embed(const Poly<FqPolyRing>& f, const CompletionContext& ctx) {
    if (!(f.ring().field() == ctx.base_field())) throw DomainError("polynomial and completion use different F_q");
    return f.map(ctx, [&](const GfPoly& c) { return ctx.from_fq_poly(c); });
}

LocalPolynomial embed(const Poly<FunctionField>& f, const CompletionContext& ctx) {
    return f.map(ctx, [&](const FunctionField::Elem& c) {
        const auto den = ctx.from_fq_poly(c.den);
        if (den.is_zero()) throw PrecisionUnderflow("denominator vanishes to the working precision");
        return ctx.div(ctx.from_fq_poly(c.num), den);
    });
}

LocalPolynomial truncate(const LocalPolynomial& f, long prec) {
    const auto& ctx = f.ring();
    return f.map(ctx, [&](const LocalElement& c) { return ctx.truncate(c, prec); });
}

GfPoly reduce(const LocalPolynomial& f) {
    const auto& ctx = f.ring();
    return f.map(ctx.residue_field(), [&](const LocalElement& c) { return ctx.residue(c); });
}

LocalPolynomial lift(const GfPoly& g, const CompletionContext& ctx) {
    return g.map(ctx, [&](GfElem c) { return ctx.from_residue(c); });
}

NewtonPolygon newton_polygon(const LocalPolynomial& f) {
    if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
    struct Pt {
        long x, y;
    };
    std::vector<Pt> hull;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const auto& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        const Pt p{static_cast<long>(i), c.val};
        while (hull.size() >= 2) {
            const Pt& o = hull[hull.size() - 2];
            const Pt& a = hull.back();
            const long cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    NewtonPolygon np;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long dx = hull[i].x - hull[i - 1].x;
        np.segments.push_back({Rational(hull[i].y - hull[i - 1].y, dx), dx});
        np.segments.back().slope.canonicalize();
    }
    return np;
}

namespace {

// The stored digits of each coefficient, read as an exact element at full
// precision. Hensel iterates are exact representatives, not approximations.
LocalPolynomial as_exact(const LocalPolynomial& f) {
    const auto& ctx = f.ring();
    std::vector<LocalElement> out;
    out.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        if (a.is_zero()) {
            out.push_back(ctx.zero());
        } else if (ctx.kind() == CompletionContext::Kind::PAdic) {
            out.push_back(ctx.mul(ctx.from_integer(a.unit), ctx.uniformizer_power(a.val)));
        } else {
            out.push_back(ctx.from_series(a.val, a.digits, ctx.precision()));
        }
    }
    return LocalPolynomial(ctx, std::move(out));
}

}  // namespace

std::pair<LocalPolynomial, LocalPolynomial> hensel_lift(const LocalPolynomial& f, const GfPoly& g0, const GfPoly& h0,
                                                        long target) {
    const auto& ctx = f.ring();
    if (target > ctx.precision()) throw PrecisionUnderflow("lifting target exceeds the working precision");
    if (target < 1) throw DomainError("lifting target must be positive");
    if (f.is_zero() || f.lc().val != 0) throw DomainError("Hensel lifting needs a unit leading coefficient");
    if (g0.degree() + h0.degree() != f.degree() || reduce(f) != g0 * h0) {
        throw DomainError("g0*h0 is not the reduction of F");
    }
    if (poly_gcd(g0, h0).degree() != 0) throw NotCoprime("factors are not coprime in the residue field");

    // Work with the monic factor m = g0/lc(g0) and the cofactor c = h0*lc(g0),
    // following the quadratic scheme with invariants f = c*m and s*c + t*m = 1.
    const GfElem lg = g0.lc();
    auto [one, s0, t0] = poly_xgcd(h0.scaled(lg), monic(g0));
    (void)one;
    LocalPolynomial m = lift(monic(g0), ctx);
    LocalPolynomial c = lift(h0.scaled(lg), ctx);
    LocalPolynomial s = lift(s0, ctx);
    LocalPolynomial t = lift(t0, ctx);
    const LocalPolynomial unit = LocalPolynomial::constant(ctx, ctx.one());
    for (long have = 1; have < target;) {
        const long next = std::min(2 * have, target);
        const LocalPolynomial fx = truncate(f, next);
        m = truncate(as_exact(m), next);
        c = truncate(as_exact(c), next);
        s = truncate(as_exact(s), next);
        t = truncate(as_exact(t), next);
        const LocalPolynomial e = fx - c * m;
        auto [q, r] = divmod(s * e, m);
        const LocalPolynomial c2 = c + t * e + q * c;
        const LocalPolynomial m2 = m + r;
        const LocalPolynomial b = s * c2 + t * m2 - unit;
        auto [cq, dr] = divmod(s * b, m2);
        s = s - dr;
        t = t - t * b - cq * c2;
        c = c2;
        m = m2;
        have = next;
    }
    m = truncate(m, target);
    c = truncate(c, target);
    const LocalElement l = ctx.from_residue(lg);
    return {truncate(m.scaled(l), target), truncate(c.scaled(ctx.inv(l)), target)};
}

LocalElement pth_root(const LocalElement& a, const CompletionContext& ctx) {
    if (ctx.kind() != CompletionContext::Kind::Laurent) throw DomainError("p-th roots need characteristic p");
    const long p = static_cast<long>(ctx.prime().get_si());
    const auto& k = ctx.residue_field();
    const long prec = a.prec >= 0 ? a.prec / p : -((-a.prec + p - 1) / p);
    if (a.is_zero()) return ctx.truncate(ctx.zero(), prec);
    if (a.val % p != 0) throw NotAPthPower(a.val);
    std::vector<GfElem> out;
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        if (i % static_cast<std::size_t>(p) != 0) {
            if (a.digits[i].value != 0) throw NotAPthPower(a.val + static_cast<long>(i));
            continue;
        }
        out.push_back(k.pth_root(a.digits[i]));
    }
    return ctx.from_series(a.val / p, out, prec);
}

LocalElement local_resultant(const LocalPolynomial& a, const LocalPolynomial& b) {
    const auto& ctx = a.ring();
    if (a.is_zero() || b.is_zero()) return ctx.zero();
    auto m = sylvester_matrix(a, b);
    const std::size_t n = m.rows();
    LocalElement det = ctx.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            if (piv == n || m(i, col).val < m(piv, col).val) piv = i;
        }
        if (piv == n) {
            // Column is zero to precision; the determinant is known to be small.
            long prec = det.is_zero() ? det.prec : det.val;
            for (std::size_t i = col; i < n; ++i) prec = std::min(prec, m(i, col).prec);
            return ctx.truncate(ctx.zero(), std::max(prec, 0L));
        }
        if (piv != col) {
            m.swap_rows(piv, col);
            det = ctx.neg(det);
        }
        const LocalElement pivot = m(col, col);
        det = ctx.mul(det, pivot);
        const LocalElement pinv = ctx.inv(pivot);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const LocalElement factor = ctx.mul(m(i, col), pinv);
            for (std::size_t j = col; j < n; ++j) m(i, j) = ctx.sub(m(i, j), ctx.mul(factor, m(col, j)));
        }
    }
    return det;
}

namespace {

// Euclid at the given input precision; a failure to invert counts as an
// unusable candidate.
std::optional<LocalPolynomial> plain_gcd(const LocalPolynomial& f, const LocalPolynomial& g, long prec) {
    try {
        return poly_gcd(truncate(f, prec), truncate(g, prec));
    } catch (const PrecisionUnderflow&) {
        return std::nullopt;
    }
}

}  // namespace

CertifiedGcd certified_gcd(const LocalPolynomial& f, const LocalPolynomial& g) {
    const auto& ctx = f.ring();
    if (g.is_zero()) return {monic(f), true};
    if (f.is_zero()) return {monic(g), true};
    const long n = ctx.precision();
    auto full = plain_gcd(f, g, n);
    if (!full) return {LocalPolynomial::constant(ctx, ctx.one()), false};
    bool certified = true;
    for (long level : {n / 4, n / 2}) {
        auto low = plain_gcd(f, g, level);
        if (!low || low->degree() != full->degree()) certified = false;
    }
    if (!certified) return {*full, false};
    if (full->degree() == 0) {
        const LocalElement res = local_resultant(f, g);
        return {*full, !res.is_zero() && res.val < n};
    }
    try {
        auto [a, ra] = divmod(f, *full);
        auto [b, rb] = divmod(g, *full);
        if (!ra.is_zero() || !rb.is_zero()) return {*full, false};
        const LocalElement res = local_resultant(a, b);
        return {*full, !res.is_zero() && res.val < n};
    } catch (const PrecisionUnderflow&) {
        return {*full, false};
    }
}

namespace {

struct RadicalState {
    bool certified = true;
};

LocalPolynomial exact_quotient(const LocalPolynomial& a, const LocalPolynomial& b, RadicalState& st) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) st.certified = false;
    return q;
}

LocalPolynomial radical_of(const LocalPolynomial& f, RadicalState& st);

long ilog_p(long m, long p) {
    long j = 0;
    while (m > 1 && m % p == 0) {
        m /= p;
        ++j;
    }
    return m == 1 ? j : -1;
}

LocalPolynomial expand_pth(const LocalPolynomial& h, long p) {
    const auto& ctx = h.ring();
    std::vector<LocalElement> out((h.coeffs().size() - 1) * static_cast<std::size_t>(p) + 1, ctx.zero());
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) out[i * static_cast<std::size_t>(p)] = h.coeffs()[i];
    return LocalPolynomial(ctx, std::move(out));
}

std::optional<LocalPolynomial> coefficient_roots(const LocalPolynomial& h) {
    const auto& ctx = h.ring();
    std::vector<LocalElement> out;
    try {
        for (const auto& c : h.coeffs()) out.push_back(pth_root(c, ctx));
    } catch (const NotAPthPower&) {
        return std::nullopt;
    }
    return LocalPolynomial(ctx, std::move(out));
}

// F' = 0, so F = H(x^p).
LocalPolynomial radical_inseparable(const LocalPolynomial& f, RadicalState& st) {
    const auto& ctx = f.ring();
    const long p = static_cast<long>(ctx.prime().get_si());
    const LocalPolynomial h = detail::contract(f, static_cast<unsigned long>(p));
    if (auto e = coefficient_roots(h)) return radical_of(monic(*e), st);
    if (h.degree() <= 1) return f;
    std::size_t nonzero = 0;
    for (const auto& c : h.coeffs()) nonzero += c.is_zero() ? 0 : 1;
    if (nonzero == 2 && !h.coeffs()[0].is_zero() && ilog_p(h.degree(), p) >= 0) return f;
    const LocalPolynomial dh = h.derivative();
    if (dh.is_zero()) throw MixedInseparableCase("x^p-contraction is itself inseparable and not a binomial");
    const auto sep = certified_gcd(h, dh);
    if (!sep.certified) {
        st.certified = false;
        return f;
    }
    if (sep.gcd.degree() > 0) throw MixedInseparableCase("x^p-contraction has repeated factors");
    // Factors of H whose coefficients are p-th powers are exactly those dividing H^D.
    const LocalPolynomial hd = h.map(ctx, [&](const LocalElement& c) { return ctx.derivation(c); });
    const auto g = certified_gcd(h, hd);
    if (!g.certified) st.certified = false;
    if (g.gcd.degree() == 0) return f;
    auto root = coefficient_roots(g.gcd);
    if (!root) {
        st.certified = false;
        return f;
    }
    return expand_pth(exact_quotient(h, g.gcd, st), p) * *root;
}

LocalPolynomial radical_of(const LocalPolynomial& f, RadicalState& st) {
    if (f.degree() <= 0) return LocalPolynomial::constant(f.ring(), f.ring().one());
    const auto& ctx = f.ring();
    const LocalPolynomial df = f.derivative();
    if (sgn(ctx.characteristic()) == 0) {
        const auto g = certified_gcd(f, df);
        if (!g.certified) st.certified = false;
        return exact_quotient(f, g.gcd, st);
    }
    if (df.is_zero()) return radical_inseparable(f, st);
    const auto g = certified_gcd(f, df);
    if (!g.certified) st.certified = false;
    const LocalPolynomial w = exact_quotient(f, g.gcd, st);
    LocalPolynomial c = g.gcd;
    while (true) {
        const auto y = certified_gcd(c, w);
        if (!y.certified) st.certified = false;
        if (y.gcd.degree() <= 0) break;
        c = exact_quotient(c, y.gcd, st);
    }
    if (c.degree() <= 0) return w;
    if (!c.derivative().is_zero()) {
        st.certified = false;
        return w;
    }
    return w * radical_inseparable(monic(c), st);
}

}  // namespace

RadicalResult radical_degree(const LocalPolynomial& f) {
    if (f.is_zero()) throw DomainError("radical of the zero polynomial");
    RadicalState st;
    try {
        LocalPolynomial rad = radical_of(monic(f), st);
        if (rad.degree() > f.degree()) st.certified = false;
        return {rad.degree(), std::move(rad), st.certified};
    } catch (const PrecisionUnderflow&) {
        return {f.degree(), monic(f), false};
    } catch (const DomainError&) {
        return {f.degree(), monic(f), false};
    }
}

}  // namespace ramlab
