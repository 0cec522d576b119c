#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "ramlab/arith/finite_field.hpp"
#include "ramlab/arith/integer.hpp"
#include "ramlab/arith/polyalg.hpp"

namespace ramlab {

/// Element of a discretely valued completion, known modulo m^prec.
///
/// A nonzero element is u^val * (unit), with the unit stored to relative
/// precision prec - val. The zero sentinel has val == kInfinity and records
/// how much is known about it in prec.
struct LocalElement {
    static constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

    long val = kInfinity;
    long prec = 0;
    Integer unit;                  // p-adic unit modulo p^(prec - val)
    std::vector<GfElem> digits;    // Laurent unit coefficients, digits[0] != 0

    bool is_zero() const noexcept { return val == kInfinity; }
};

/// A completion K*_p together with a working precision N: either Q_p or the
/// Laurent field k((u)) of F_q(t) at a monic irreducible pi(t), where k is
/// the residue field F_q[t]/(pi) and t maps to the series T(u) with
/// pi(T(u)) = u. This is also the ring object for LocalElement, with every
/// result capped at absolute precision N.
class CompletionContext {
   public:
    using Elem = LocalElement;
    enum class Kind { PAdic, Laurent };

    static CompletionContext p_adic(const Integer& p, long precision);
    /// Completion of F_q(t) at pi; pi must be monic irreducible over fq.
    static CompletionContext laurent(const FiniteField& fq, const GfPoly& pi, long precision);
    /// F_p((t)) at pi = t.
    static CompletionContext laurent(std::uint32_t p, long precision);

    Kind kind() const noexcept;
    long precision() const noexcept;
    CompletionContext with_precision(long precision) const;
    /// Residue characteristic p.
    const Integer& prime() const noexcept;
    const FiniteField& residue_field() const noexcept;
    /// Coefficient field F_q of the function field (Laurent only).
    const FiniteField& base_field() const;
    /// The prime pi(t) (Laurent only).
    const GfPoly& prime_poly() const;
    /// Image of F_q in the residue field (Laurent only).
    GfElem embed_constant(GfElem c) const;
    /// The image T(u) of t (Laurent only).
    const LocalElement& t_image() const;
    std::string uniformizer() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(long n) const;
    Elem from_integer(const Integer& n) const;
    Elem from_rational(const Rational& q) const;
    /// The Teichmuller-free lift: the constant with residue c.
    Elem from_residue(GfElem c) const;
    /// u^k.
    Elem uniformizer_power(long k) const;
    /// sum_i c_i u^(val + i) to the given absolute precision (Laurent only).
    Elem from_series(long val, const std::vector<GfElem>& coeffs, long prec) const;
    /// Image of a polynomial in t over F_q (Laurent only).
    Elem from_fq_poly(const GfPoly& g) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return sub(a, b).is_zero(); }
    Integer characteristic() const;
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return {div(a, b), zero()}; }
    Elem normalizer(const Elem& a) const { return a.is_zero() ? one() : inv(a); }

    /// Lowers the absolute precision of a to at most prec.
    Elem truncate(const Elem& a, long prec) const;
    /// Residue class of an integral element.
    GfElem residue(const Elem& a) const;
    /// Coefficient of u^k in a (k >= val; must lie below prec).
    GfElem series_coeff(const Elem& a, long k) const;
    /// d/du of a Laurent series.
    Elem derivation(const Elem& a) const;

    /// `valuation | digits`, digits low to high with trailing zeros dropped;
    /// zero renders as `inf`.
    std::string to_string(const Elem& a) const;
    /// Unit digits in the residue system, low to high, trailing zeros dropped.
    std::vector<std::string> digit_strings(const Elem& a) const;

    bool operator==(const CompletionContext& other) const;

   private:
    struct Data;
    explicit CompletionContext(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    Elem make_padic(long v, long prec, Integer s) const;
    Elem make_laurent(long v, long prec, std::vector<GfElem> s) const;
    std::shared_ptr<const Data> d_;
};

}  // namespace ramlab
