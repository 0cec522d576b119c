#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "ramlab/arith/integer.hpp"
#include "ramlab/arith/polyalg.hpp"

namespace ramlab {

/// Sparse polynomial with rational coefficients in the indeterminates
/// x (the extension variable), t (the base-ring variable) and a (the
/// generator of F_q over F_p). Intermediate form of the shared text grammar.
class TextPoly {
   public:
    using Exponents = std::array<unsigned, 3>;  // (x, t, a)

    static TextPoly constant(Rational c);
    static TextPoly variable(std::size_t index);

    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    unsigned degree_in(std::size_t index) const;
    bool uses(std::size_t index) const { return degree_in(index) > 0; }

    TextPoly operator+(const TextPoly& o) const;
    TextPoly operator-() const;
    TextPoly operator-(const TextPoly& o) const { return *this + (-o); }
    TextPoly operator*(const TextPoly& o) const;
    TextPoly pow(unsigned e) const;

   private:
    void add_term(const Exponents& e, const Rational& c);
    std::map<Exponents, Rational> terms_;
};

/// Parses the repo-wide polynomial grammar: rational constants, the
/// identifiers x, t, a, `+ - * /`, `^` with a non-negative integer exponent,
/// parentheses, and optional `*` between juxtaposed factors. Division is only
/// by nonzero constants. Columns in ParseError are 1-based within `text`.
TextPoly parse_text_poly(std::string_view text);

/// Polynomial in x over Q; rejects t and a.
Poly<RationalField> to_rational_poly(const TextPoly& p);
/// Polynomial in x over Z; rejects non-integral coefficients.
Poly<IntegerRing> to_integer_poly(const TextPoly& p);
/// Polynomial in x over F_q[t]; denominators must be units mod p, and a is
/// only allowed when q is not prime.
Poly<FqPolyRing> to_fq_t_poly(const TextPoly& p, const FiniteField& fq);
/// Polynomial in t over F_q (for primes of F_q[t]); rejects x.
GfPoly to_fq_poly_in_t(const TextPoly& p, const FiniteField& fq);

}  // namespace ramlab
