#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ramlab/arith/ring.hpp"
#include "ramlab/errors.hpp"

namespace ramlab {

/// Dense univariate polynomial over a ring object. Coefficients are stored
/// low-to-high; the leading coefficient is nonzero unless the polynomial is
/// zero (empty coefficient list).
template <CommutativeRing Ring>
class Poly {
   public:
    using Elem = typename Ring::Elem;

    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    Poly(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Ring ring, Elem c) { return Poly(std::move(ring), std::vector<Elem>{std::move(c)}); }
    static Poly monomial(Ring ring, Elem c, std::size_t k) {
        std::vector<Elem> coeffs(k + 1, ring.zero());
        coeffs[k] = std::move(c);
        return Poly(std::move(ring), std::move(coeffs));
    }
    /// The indeterminate.
    static Poly x(Ring ring) {
        auto one = ring.one();
        return monomial(std::move(ring), std::move(one), 1);
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
    const Elem& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && ring_.equal(c_.back(), ring_.one()); }

    Poly operator-() const {
        std::vector<Elem> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(ring_.neg(a));
        return Poly(ring_, std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        std::vector<Elem> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= a.c_.size())
                out.push_back(b.c_[i]);
            else if (i >= b.c_.size())
                out.push_back(a.c_[i]);
            else
                out.push_back(a.ring_.add(a.c_[i], b.c_[i]));
        }
        return Poly(a.ring_, std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
        const auto& r = a.ring_;
        std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, r.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (r.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (r.is_zero(b.c_[j])) continue;
                out[i + j] = r.add(out[i + j], r.mul(a.c_[i], b.c_[j]));
            }
        }
        return Poly(r, std::move(out));
    }

    Poly scaled(const Elem& s) const {
        std::vector<Elem> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(ring_.mul(a, s));
        return Poly(ring_, std::move(out));
    }
    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<Elem> out(k, ring_.zero());
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(ring_, std::move(out));
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.ring_.equal(a.c_[i], b.c_[i])) return false;
        }
        return true;
    }

    Elem eval(const Elem& v) const {
        Elem acc = ring_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, v), c_[i]);
        return acc;
    }

    Poly derivative() const {
        std::vector<Elem> out;
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(ring_.mul(ring_.from_int(static_cast<long>(i)), c_[i]));
        return Poly(ring_, std::move(out));
    }

    /// Coefficientwise image under a ring homomorphism.
    template <class Target, class Map>
    Poly<Target> map(Target target, Map&& fn) const {
        std::vector<typename Target::Elem> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(fn(a));
        return Poly<Target>(std::move(target), std::move(out));
    }

    std::string to_string(std::string_view var = "x") const;

   private:
    void normalize() {
        while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
    }

    Ring ring_;
    std::vector<Elem> c_;
};

namespace detail {

inline bool needs_parentheses(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == ' ' || s[i] == '+' || s[i] == '-') return true;
    }
    return false;
}

}  // namespace detail

template <CommutativeRing Ring>
std::string Poly<Ring>::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (ring_.is_zero(c_[i])) continue;
        std::string coeff = ring_.to_string(c_[i]);
        bool negative = false;
        if (!coeff.empty() && coeff[0] == '-' && !detail::needs_parentheses(coeff)) {
            negative = true;
            coeff.erase(0, 1);
        }
        if (detail::needs_parentheses(coeff)) coeff = "(" + coeff + ")";
        std::string mono;
        if (i == 1)
            mono = std::string(var);
        else if (i > 1)
            mono = std::string(var) + "^" + std::to_string(i);
        std::string term;
        if (mono.empty())
            term = coeff;
        else if (coeff == "1")
            term = mono;
        else
            term = coeff + "*" + mono;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Division and gcd over a field.

template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const auto& r = a.ring();
    if (a.degree() < b.degree()) return {Poly<F>(r), a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<typename F::Elem> rem = a.coeffs();
    std::vector<typename F::Elem> quo(rem.size() - db, r.zero());
    const auto lc_inv = r.inv(b.lc());
    for (std::size_t d = rem.size(); d-- > db;) {
        if (r.is_zero(rem[d])) continue;
        const auto c = r.mul(rem[d], lc_inv);
        quo[d - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[d - db + i] = r.sub(rem[d - db + i], r.mul(c, b.coeffs()[i]));
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Poly<F>(r, std::move(quo)), Poly<F>(r, std::move(rem))};
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <Field F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).first;
}

template <Field F>
Poly<F> monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return a.scaled(a.ring().inv(a.lc()));
}

/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
template <Field F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
    const auto& r = a.ring();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(r, r.one()), s1(r);
    Poly<F> t0(r), t1 = Poly<F>::constant(r, r.one());
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const auto inv = r.inv(r0.lc());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <Field F>
Poly<F> powmod(Poly<F> base, unsigned long long e, const Poly<F>& m) {
    Poly<F> result = Poly<F>::constant(m.ring(), m.ring().one()) % m;
    base = base % m;
    while (e > 0) {
        if (e & 1ULL) result = (result * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return result;
}

/// Exact division over an integral domain: b must divide a.
template <EuclideanRing R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const auto& r = a.ring();
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<typename R::Elem> rem = a.coeffs();
    std::vector<typename R::Elem> quo(rem.size() - db, r.zero());
    for (std::size_t d = rem.size(); d-- > db;) {
        if (r.is_zero(rem[d])) continue;
        auto [c, cr] = r.divmod(rem[d], b.lc());
        if (!r.is_zero(cr)) throw DomainError("inexact polynomial division");
        quo[d - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[d - db + i] = r.sub(rem[d - db + i], r.mul(c, b.coeffs()[i]));
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (!r.is_zero(rem[i])) throw DomainError("inexact polynomial division");
    }
    return Poly<R>(r, std::move(quo));
}

// ---------------------------------------------------------------------------
// F[t] as a Euclidean ring, used as the base ring A = F_q[t].

template <Field F>
class UPolyRing {
   public:
    using Elem = Poly<F>;

    explicit UPolyRing(F field, std::string var = "t") : field_(std::move(field)), var_(std::move(var)) {}

    const F& field() const noexcept { return field_; }
    const std::string& variable() const noexcept { return var_; }

    Elem zero() const { return Elem(field_); }
    Elem one() const { return Elem::constant(field_, field_.one()); }
    Elem from_int(long n) const { return Elem::constant(field_, field_.from_int(n)); }
    Elem constant(typename F::Elem c) const { return Elem::constant(field_, std::move(c)); }
    Elem var() const { return Elem::x(field_); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.to_string(var_); }
    auto characteristic() const { return field_.characteristic(); }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return ramlab::divmod(a, b); }
    Elem normalizer(const Elem& a) const {
        return a.is_zero() ? one() : Elem::constant(field_, field_.inv(a.lc()));
    }

    bool operator==(const UPolyRing& other) const { return field_ == other.field_; }

   private:
    F field_;
    std::string var_;
};

}  // namespace ramlab
