#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ramlab/arith/integer.hpp"

namespace ramlab {

/// Element of F_q encoded by its coordinates in the power basis of the
/// defining modulus: value = sum_i c_i p^i where c_i is the coefficient of y^i.
struct GfElem {
    std::uint32_t value = 0;
    friend auto operator<=>(GfElem, GfElem) = default;
};

/// F_q with q = p^k, represented as F_p[y]/(m(y)).
///
/// Prime fields use direct modular arithmetic. Extension fields use log/exp
/// tables and are limited to q <= 2^16. Fields obtained from get() for
/// q <= 81 use a fixed table of Conway polynomials so that printed
/// representations are reproducible; larger ones use the first irreducible
/// in lexicographic order.
class FiniteField {
   public:
    using Elem = GfElem;

    static FiniteField get(std::uint32_t p, unsigned k = 1);
    /// F_p[y]/(modulus); modulus is monic, given low-to-high, and must be irreducible.
    static FiniteField with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept;
    unsigned degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Monic defining polynomial, low-to-high coefficients.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    Elem from_int(long n) const;
    Elem from_integer(const Integer& n) const;
    /// The class of y (a field generator over F_p).
    Elem generator() const;
    Elem element(std::uint32_t index) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;
    std::vector<std::uint32_t> digits(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, const Integer& e) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p())); }
    /// Unique p-th root (the field is perfect).
    Elem pth_root(Elem a) const;
    bool is_zero(Elem a) const { return a.value == 0; }
    bool equal(Elem a, Elem b) const { return a.value == b.value; }
    std::pair<Elem, Elem> divmod(Elem a, Elem b) const { return {div(a, b), zero()}; }
    Elem normalizer(Elem a) const { return is_zero(a) ? one() : inv(a); }
    Integer characteristic() const { return p(); }
    /// Prime-field elements print as 0..p-1; others as polynomials in `a`.
    std::string to_string(Elem a) const;

    bool operator==(const FiniteField& other) const;

   private:
    struct Tables;
    explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

/// Fixed Conway-style modulus for p^k <= 81, or empty if none is tabulated.
std::vector<std::uint32_t> conway_modulus(std::uint32_t p, unsigned k);

}  // namespace ramlab
