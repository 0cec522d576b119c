#pragma once

#include <concepts>
#include <string>
#include <utility>

namespace ramlab {

// Rings are explicit value objects: elements are plain data and every
// operation goes through the ring, so that runtime-parameterized rings
// (F_q, completions) and static ones (Z, Q) share the generic algorithms.

template <class R>
concept CommutativeRing = std::copy_constructible<R> &&
    requires(const R& r, const typename R::Elem& a, const typename R::Elem& b, long n) {
        typename R::Elem;
        { r.zero() } -> std::convertible_to<typename R::Elem>;
        { r.one() } -> std::convertible_to<typename R::Elem>;
        { r.from_int(n) } -> std::convertible_to<typename R::Elem>;
        { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
        { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
        { r.neg(a) } -> std::convertible_to<typename R::Elem>;
        { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
        { r.is_zero(a) } -> std::convertible_to<bool>;
        { r.equal(a, b) } -> std::convertible_to<bool>;
        { r.to_string(a) } -> std::convertible_to<std::string>;
    };

template <class R>
concept Field = CommutativeRing<R> && requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    { r.inv(a) } -> std::convertible_to<typename R::Elem>;
    { r.div(a, b) } -> std::convertible_to<typename R::Elem>;
};

/// divmod returns (q, r) with a = q*b + r and r canonical; normalizer(a) is a
/// unit u such that u*a is the canonical associate of a.
template <class R>
concept EuclideanRing = CommutativeRing<R> && requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    { r.divmod(a, b) } -> std::convertible_to<std::pair<typename R::Elem, typename R::Elem>>;
    { r.normalizer(a) } -> std::convertible_to<typename R::Elem>;
};

template <CommutativeRing R>
typename R::Elem ring_pow(const R& ring, typename R::Elem base, unsigned long long e) {
    auto result = ring.one();
    while (e > 0) {
        if (e & 1ULL) result = ring.mul(result, base);
        e >>= 1;
        if (e > 0) base = ring.mul(base, base);
    }
    return result;
}

template <EuclideanRing R>
typename R::Elem ring_gcd(const R& ring, typename R::Elem a, typename R::Elem b) {
    while (!ring.is_zero(b)) {
        auto r = ring.divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (ring.is_zero(a)) return a;
    return ring.mul(a, ring.normalizer(a));
}

}  // namespace ramlab
