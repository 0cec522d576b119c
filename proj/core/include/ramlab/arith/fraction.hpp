#pragma once

#include <string>
#include <utility>

#include "ramlab/arith/ring.hpp"
#include "ramlab/errors.hpp"

namespace ramlab {

template <class E>
struct Fraction {
    E num;
    E den;
};

/// Field of fractions of a Euclidean ring; elements are kept reduced with a
/// canonical denominator. Used for F_q(t).
template <EuclideanRing R>
class FractionField {
   public:
    using Elem = Fraction<typename R::Elem>;

    explicit FractionField(R base) : base_(std::move(base)) {}
    const R& base() const noexcept { return base_; }

    Elem make(typename R::Elem num, typename R::Elem den) const {
        if (base_.is_zero(den)) throw DomainError("zero denominator");
        auto g = ring_gcd(base_, num, den);
        if (!base_.is_zero(g)) {
            num = base_.divmod(num, g).first;
            den = base_.divmod(den, g).first;
        }
        const auto u = base_.normalizer(den);
        return {base_.mul(num, u), base_.mul(den, u)};
    }
    Elem embed(typename R::Elem a) const { return {std::move(a), base_.one()}; }

    Elem zero() const { return embed(base_.zero()); }
    Elem one() const { return embed(base_.one()); }
    Elem from_int(long n) const { return embed(base_.from_int(n)); }
    Elem add(const Elem& a, const Elem& b) const {
        return make(base_.add(base_.mul(a.num, b.den), base_.mul(b.num, a.den)), base_.mul(a.den, b.den));
    }
    Elem neg(const Elem& a) const { return {base_.neg(a.num), a.den}; }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const { return make(base_.mul(a.num, b.num), base_.mul(a.den, b.den)); }
    Elem inv(const Elem& a) const {
        if (base_.is_zero(a.num)) throw DomainError("inverse of zero fraction");
        return make(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return base_.is_zero(a.num); }
    bool equal(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }
    std::string to_string(const Elem& a) const {
        if (base_.equal(a.den, base_.one())) return base_.to_string(a.num);
        return "(" + base_.to_string(a.num) + ")/(" + base_.to_string(a.den) + ")";
    }
    auto characteristic() const { return base_.characteristic(); }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return {div(a, b), zero()}; }
    Elem normalizer(const Elem& a) const { return is_zero(a) ? one() : inv(a); }

    bool operator==(const FractionField& other) const { return base_ == other.base_; }

   private:
    R base_;
};

}  // namespace ramlab
