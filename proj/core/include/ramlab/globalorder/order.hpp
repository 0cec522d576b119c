#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramlab/arith/integer.hpp"
#include "ramlab/arith/matrix.hpp"
#include "ramlab/arith/polyalg.hpp"

namespace ramlab {

/// Reduction R -> k(p) and a fixed set-theoretic section k(p) -> R, for
/// R = Z or F_q[t]. The residue field is Z/p or F_q[t]/(pi), the latter
/// built as F_{p^(k deg pi)} with F_q embedded through a root of its modulus
/// and t sent to a root of pi.
template <class R>
class ResidueMap;

template <>
class ResidueMap<IntegerRing> {
   public:
    using Elem = Integer;
    /// p must be a prime below 2^16.
    ResidueMap(IntegerRing ring, Integer p);

    const IntegerRing& ring() const noexcept { return ring_; }
    const Integer& prime() const noexcept { return p_; }
    const FiniteField& field() const noexcept { return k_; }
    GfElem reduce(const Integer& a) const { return k_.from_integer(a); }
    Integer lift(GfElem c) const { return c.value; }
    std::string prime_string() const { return p_.get_str(); }

   private:
    IntegerRing ring_;
    Integer p_;
    FiniteField k_;
};

template <>
class ResidueMap<FqPolyRing> {
   public:
    using Elem = GfPoly;
    /// pi must be monic irreducible over the coefficient field, with
    /// q^deg(pi) <= 2^16.
    ResidueMap(FqPolyRing ring, GfPoly pi);

    const FqPolyRing& ring() const noexcept { return ring_; }
    const GfPoly& prime() const noexcept { return p_; }
    const FiniteField& field() const noexcept { return k_; }
    GfElem reduce(const GfPoly& a) const;
    GfPoly lift(GfElem c) const { return lifts_[c.value]; }
    GfElem embed_constant(GfElem c) const;
    std::string prime_string() const { return p_.to_string("t"); }

   private:
    FqPolyRing ring_;
    GfPoly p_;
    FiniteField k_;
    GfElem iota_gen_;
    GfElem tau_;
    std::vector<GfPoly> lifts_;
};

/// A[theta] = A[x]/(f) for monic f.
template <class R>
struct EquationOrder {
    R ring;
    Poly<R> f;
    std::size_t degree() const { return static_cast<std::size_t>(f.degree()); }
};

/// Checks that f is monic of positive degree and squarefree; in
/// characteristic p an f with f' = 0 is accepted only as x^(p^k) - a.
template <class R>
EquationOrder<R> equation_order(const Poly<R>& f);

struct DedekindResult {
    bool maximal;
    /// gcd(F mod p, g mod p, h mod p) in the usual notation; 1 when maximal.
    GfPoly witness;
};

template <class R>
DedekindResult dedekind_criterion(const EquationOrder<R>& order, const typename R::Elem& p);

/// O/pO as an algebra over k(p) in the reduced basis of O.
struct QuotientAlgebra {
    FiniteField field;
    std::size_t dim = 0;
    /// table[i][j] = coordinates of b_i * b_j.
    std::vector<std::vector<std::vector<GfElem>>> table;
    std::vector<GfElem> one;

    std::vector<GfElem> mul(const std::vector<GfElem>& a, const std::vector<GfElem>& b) const;
    std::vector<GfElem> pow(std::vector<GfElem> a, const Integer& e) const;
};

/// A p-maximal order O_p: basis element i is (sum_j basis(i,j) theta^j) / denominator,
/// with basis lower triangular in Hermite form and the denominator a power of p.
template <class R>
struct LocalMaximalOrder {
    EquationOrder<R> order;
    typename R::Elem prime;
    Matrix<typename R::Elem> basis;
    typename R::Elem denominator;
    /// Number of enlargement steps taken.
    std::size_t rounds = 0;

    std::string basis_string(std::size_t i) const;
    /// [O_p : A[theta]] as an element of R (a power of p up to units).
    typename R::Elem index() const;
};

/// Round-2 enlargement of A[theta] to a p-maximal order.
template <class R>
LocalMaximalOrder<R> round2_pmaximal(const EquationOrder<R>& order, const typename R::Elem& p);
/// Continues Round 2 from an already enlarged order.
template <class R>
LocalMaximalOrder<R> round2_pmaximal(const LocalMaximalOrder<R>& start);

template <class R>
QuotientAlgebra quotient_algebra(const LocalMaximalOrder<R>& o);

struct RamifiedPrime {
    long e;
    long f;
    /// Minimal polynomial over k(p) of the image of theta in O/P.
    GfPoly residue_poly;
    /// Primitive idempotent of O/pO cutting out the P-primary component.
    std::vector<GfElem> idempotent;
};

template <class R>
std::vector<RamifiedPrime> decompose_prime(const LocalMaximalOrder<R>& o);

/// dim over k(p) of O_p/pO_p.
template <class R>
long dim_quotient_mod_p(const LocalMaximalOrder<R>& o);

}  // namespace ramlab
