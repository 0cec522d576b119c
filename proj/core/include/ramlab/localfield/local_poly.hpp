#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/arith/integer.hpp"
#include "ramlab/arith/polyalg.hpp"
#include "ramlab/config.hpp"
#include "ramlab/errors.hpp"
#include "ramlab/localfield/local_field.hpp"

namespace ramlab {

using LocalPolynomial = Poly<CompletionContext>;

LocalPolynomial embed(const Poly<IntegerRing>& f, const CompletionContext& ctx);
LocalPolynomial embed(const Poly<RationalField>& f, const CompletionContext& ctx);
LocalPolynomial embed(const Poly<FqPolyRing>& f, const CompletionContext& ctx);
LocalPolynomial embed(const Poly<FunctionField>& f, const CompletionContext& ctx);

/// Coefficientwise truncation to absolute precision prec.
LocalPolynomial truncate(const LocalPolynomial& f, long prec);
/// Reduction of an integral polynomial to the residue field.
GfPoly reduce(const LocalPolynomial& f);
LocalPolynomial lift(const GfPoly& g, const CompletionContext& ctx);

struct NewtonSegment {
    Rational slope;
    long length;
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
};

/// Lower convex hull of the points (i, v(a_i)), slopes increasing.
NewtonPolygon newton_polygon(const LocalPolynomial& f);

/// Quadratic Hensel lifting of F = g0*h0 (mod m) to F = G*H (mod m^target).
/// lc(F) must be a unit. G is monic whenever g0 is.
std::pair<LocalPolynomial, LocalPolynomial> hensel_lift(const LocalPolynomial& f, const GfPoly& g0, const GfPoly& h0,
                                                        long target);

/// b with b^p = a in F_q((u)), to absolute precision floor(prec(a)/p).
LocalElement pth_root(const LocalElement& a, const CompletionContext& ctx);

/// Resultant by elimination with minimal-valuation pivots.
LocalElement local_resultant(const LocalPolynomial& a, const LocalPolynomial& b);

struct CertifiedGcd {
    LocalPolynomial gcd;
    bool certified;
};

/// Monic gcd at the context precision N. Certified when the gcd degree
/// agrees at input precisions N/4, N/2 and N and the resultant of the
/// cofactors has valuation below N.
CertifiedGcd certified_gcd(const LocalPolynomial& f, const LocalPolynomial& g);

struct RadicalResult {
    long degree;
    LocalPolynomial radical;
    bool certified;
};

/// Degree of the product of the distinct monic irreducible factors of F over
/// the completion, at the precision F carries. PrecisionUnderflow and
/// failed gcd certificates are reported as certified = false.
RadicalResult radical_degree(const LocalPolynomial& f);

/// radical_degree(make(ctx_N)) for N = max(precision, start), then doubling
/// up to max_precision(); throws RadicalInconclusive if no attempt certifies.
/// A nontrivial gcd at precision N only says the inputs agree with a
/// repeated-factor polynomial mod m^N, so callers holding an exact
/// polynomial pass a start beyond its discriminant valuation.
template <class Make>
RadicalResult radical_degree_doubling(Make&& make, const CompletionContext& ctx, long start = 0) {
    const long cap = max_precision();
    long n = std::min(std::max(ctx.precision(), start), std::max(cap, ctx.precision()));
    while (true) {
        RadicalResult r = radical_degree(make(ctx.with_precision(n)));
        if (r.certified) return r;
        if (n >= cap) break;
        n = std::min(2 * n, cap);
    }
    throw RadicalInconclusive("radical degree not certified up to precision " + std::to_string(cap));
}

}  // namespace ramlab
