#include "ramlab/schmidt/schmidt.hpp"

#include <sstream>

#include "ramlab/errors.hpp"

namespace ramlab {

namespace {

GfPoly power(const GfPoly& a, unsigned e) {
    GfPoly r = GfPoly::constant(a.ring(), a.ring().one());
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

GfPoly truncate_poly(const GfPoly& a, long m) {
    std::vector<GfElem> c;
    for (long i = 0; i <= a.degree() && i <= m; ++i) c.push_back(a.coeff(static_cast<std::size_t>(i)));
    if (c.empty()) c.push_back(a.ring().zero());
    return GfPoly(a.ring(), c);
}

}  // namespace

SchmidtModel build_model(unsigned p, long precision) {
    if (p != 2 && p != 3 && p != 5 && p != 7) throw ValidationError("p must be one of 2, 3, 5, 7");
    if (precision < 6 * static_cast<long>(p)) {
        throw PrecisionTooSmall("precision " + std::to_string(precision) + " below 6p = " + std::to_string(6 * p));
    }
    const auto fp = FiniteField::get(p);
    std::vector<GfElem> coeffs(static_cast<std::size_t>(precision) + 1, fp.zero());
    coeffs[0] = fp.one();
    long fact = 1;
    for (long k = 1; fact <= precision; ++k) {
        coeffs[static_cast<std::size_t>(fact)] = fp.one();
        fact *= k + 1;
    }
    GfPoly c(fp, coeffs);
    GfPoly s = power(c, p);
    return {p, precision, CompletionContext::laurent(p, precision), std::move(c), std::move(s), {kTranscendenceCaveat}};
}

TensorSplit tensor_split(const SchmidtModel& model) {
    const auto& ctx = model.ctx;
    const auto x = LocalPolynomial::x(ctx);
    const auto c = LocalPolynomial::constant(ctx, ctx.from_fq_poly(model.c));
    LocalPolynomial lhs = LocalPolynomial::constant(ctx, ctx.one());
    for (unsigned i = 0; i < model.p; ++i) lhs = lhs * (x - c);
    const LocalPolynomial f =
        LocalPolynomial::monomial(ctx, ctx.one(), model.p) - LocalPolynomial::constant(ctx, ctx.from_fq_poly(model.s));

    bool verified = lhs.degree() == f.degree();
    for (long i = 0; verified && i <= f.degree(); ++i) {
        verified = ctx.equal(lhs.coeff(static_cast<std::size_t>(i)), f.coeff(static_cast<std::size_t>(i)));
    }
    const RadicalResult r = radical_degree(f);
    if (!r.certified) throw RadicalInconclusive("radical of x^p - s not certified");
    const std::string ps = std::to_string(model.p);
    return {r.degree, static_cast<long>(model.p) - r.degree, verified, "x^" + ps + " - s = (x - c)^" + ps};
}

ResidueWitness residue_witness(const SchmidtModel& model, long m) {
    if (m < 0 || m > model.precision) throw ValidationError("witness depth must lie in [0, precision]");
    GfPoly y = truncate_poly(model.c, m);
    // c is known modulo t^(N+1), so c^p is known modulo t^(p(N+1)).
    const long known = static_cast<long>(model.p) * (model.precision + 1);
    const GfPoly d = model.s - power(y, model.p);
    for (long i = 0; i <= d.degree() && i < known; ++i) {
        if (!d.ring().is_zero(d.coeff(static_cast<std::size_t>(i)))) {
            return {m, std::move(y), i / static_cast<long>(model.p), true};
        }
    }
    return {m, std::move(y), model.precision + 1, false};
}

SchmidtReport strict_inequality_report(const SchmidtModel& model) {
    SchmidtReport rep{};
    rep.p = model.p;
    rep.precision = model.precision;
    rep.degree = model.p;
    const TensorSplit split = tensor_split(model);
    rep.rhs = split.rhs_dim;
    rep.radical_dim = split.radical_dim;
    rep.witnessed_to = -1;
    for (long m = 0; m <= model.precision && residue_witness(model, m).holds(); ++m) rep.witnessed_to = m;
    // One prime with e = f = 1 once u is approximated to every depth we can see.
    rep.lhs = split.verified && rep.witnessed_to >= model.precision / static_cast<long>(model.p) ? 1 : 0;
    rep.classical = rep.lhs == rep.degree;
    rep.eq11 = rep.lhs == rep.rhs;
    rep.inequality = rep.lhs <= rep.degree && rep.rhs <= rep.degree;
    rep.caveats = model.caveats;
    return rep;
}

std::string SchmidtReport::summary() const {
    std::ostringstream os;
    os << lhs << (lhs < degree ? " < " : lhs == degree ? " = " : " > ") << degree << "; " << lhs
       << (eq11 ? " = " : " != ") << rhs << (eq11 ? " OK" : " FAIL");
    return os.str();
}

std::string SchmidtReport::to_text() const {
    std::ostringstream os;
    os << "Σ e f = " << lhs << (lhs < degree ? " < " : lhs == degree ? " = " : " > ") << degree << " = [L:K]; "
       << lhs << (eq11 ? " = " : " != ") << rhs << (eq11 ? " OK" : " FAIL") << "\n";
    os << "p = " << p << ", precision = " << precision << "\n";
    os << "[L:K] = " << degree << "\n";
    os << "sum e*f = " << lhs << " (one prime, e = 1, f = 1; witnessed for m <= " << witnessed_to << ")\n";
    os << "semisimple degree over F_" << p << "((t)) = " << rhs << ", radical dimension " << radical_dim << "\n";
    os << "classical identity: " << lhs << (classical ? " = " : " < ") << degree << (classical ? " OK" : " FAILS")
       << "\n";
    os << "local identity: " << lhs << (eq11 ? " = " : " != ") << rhs << (eq11 ? " OK" : " FAILS") << "\n";
    os << "fundamental inequality: " << lhs << " <= " << degree << (inequality ? " OK" : " FAILS") << "\n";
    for (const auto& c : caveats) os << "caveat: " << c << "\n";
    return os.str();
}

}  // namespace ramlab
