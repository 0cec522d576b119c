#include "ramlab/arith/finite_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "ramlab/errors.hpp"

namespace ramlab {

namespace {

constexpr std::uint32_t kMaxExtensionOrder = 1U << 16;

using Digits = std::vector<std::uint32_t>;

// Naive arithmetic on coefficient vectors over F_p, used only while the
// tables are being built.
Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t d = prod.size(); d-- > k;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) {
            prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
        }
    }
    Digits out(k, 0);
    for (std::size_t i = 0; i < k && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

// Remainder of a by monic b over F_p.
Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0) {
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
        }
        a.pop_back();
    }
    return a;
}

bool is_irreducible_brute(const Digits& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits cand(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[d] = 1;
            Digits r = poly_rem(m, cand, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

struct FiniteField::Tables {
    std::uint32_t p = 2;
    unsigned k = 1;
    std::uint32_t q = 2;
    Digits modulus;
    std::vector<std::uint32_t> pow_p;      // p^i, i < k
    std::vector<std::uint32_t> exp_table;  // g^i for i < q-1 (k > 1 only)
    std::vector<std::uint32_t> log_table;  // inverse of exp_table on nonzero values

    Digits to_digits(std::uint32_t v) const {
        Digits d(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }
    std::uint32_t from_digits(const Digits& d) const {
        std::uint32_t v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + (i < d.size() ? d[i] % p : 0);
        return v;
    }
};

std::vector<std::uint32_t> conway_modulus(std::uint32_t p, unsigned k) {
    static const std::map<std::pair<std::uint32_t, unsigned>, Digits> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    auto it = table.find({p, k});
    return it == table.end() ? Digits{} : it->second;
}

FiniteField FiniteField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(Integer(p))) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("field modulus must be monic of degree >= 1");
    for (auto& c : modulus) c %= p;
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = static_cast<unsigned>(modulus.size() - 1);
    t->modulus = std::move(modulus);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < t->k; ++i) {
        t->pow_p.push_back(static_cast<std::uint32_t>(q));
        q *= p;
        if (t->k > 1 && q > kMaxExtensionOrder) throw DomainError("extension field too large (q > 65536)");
    }
    if (q > 0xFFFFFFFFULL) throw DomainError("field order exceeds 32 bits");
    t->q = static_cast<std::uint32_t>(q);
    if (t->k == 1) return FiniteField(std::move(t));

    if (!is_irreducible_brute(t->modulus, p)) throw DomainError("field modulus is reducible");
    const std::uint64_t group = q - 1;
    const auto factors = distinct_prime_factors(group);
    auto power = [&](const Digits& base, std::uint64_t e) {
        Digits result(t->k, 0);
        result[0] = 1;
        Digits b = base;
        while (e > 0) {
            if (e & 1ULL) result = poly_mulmod(result, b, t->modulus, p);
            e >>= 1;
            if (e > 0) b = poly_mulmod(b, b, t->modulus, p);
        }
        return result;
    };
    const Digits one_digits = t->to_digits(1);
    std::uint32_t generator = 0;
    for (std::uint32_t cand = 2; cand < q; ++cand) {
        const Digits c = t->to_digits(cand);
        bool primitive = true;
        for (auto l : factors) {
            if (power(c, group / l) == one_digits) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = cand;
            break;
        }
    }
    if (generator == 0) throw DomainError("no primitive element found");
    t->exp_table.assign(group, 0);
    t->log_table.assign(q, 0);
    Digits cur = one_digits;
    const Digits g = t->to_digits(generator);
    for (std::uint64_t i = 0; i < group; ++i) {
        const std::uint32_t v = t->from_digits(cur);
        t->exp_table[i] = v;
        t->log_table[v] = static_cast<std::uint32_t>(i);
        cur = poly_mulmod(cur, g, t->modulus, p);
    }
    return FiniteField(std::move(t));
}

FiniteField FiniteField::get(std::uint32_t p, unsigned k) {
    if (k == 0) throw DomainError("field degree must be positive");
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, FiniteField> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
    Digits modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        modulus = conway_modulus(p, k);
        if (modulus.empty()) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < k; ++i) count *= p;
            if (count > kMaxExtensionOrder) throw DomainError("extension field too large (q > 65536)");
            for (std::uint64_t idx = 0; idx < count && modulus.empty(); ++idx) {
                Digits cand(k + 1, 0);
                std::uint64_t v = idx;
                for (unsigned i = 0; i < k; ++i) {
                    cand[i] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                cand[k] = 1;
                if (cand[0] != 0 && is_irreducible_brute(cand, p)) modulus = cand;
            }
        }
    }
    FiniteField field = with_modulus(p, modulus);
    cache.emplace(std::make_pair(p, k), field);
    return field;
}

std::uint32_t FiniteField::p() const noexcept { return t_->p; }
unsigned FiniteField::degree() const noexcept { return t_->k; }
std::uint32_t FiniteField::order() const noexcept { return t_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const noexcept { return t_->modulus; }

GfElem FiniteField::from_int(long n) const {
    const long p = static_cast<long>(t_->p);
    long r = n % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r)};
}

GfElem FiniteField::from_integer(const Integer& n) const {
    Integer r;
    Integer p = t_->p;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return {static_cast<std::uint32_t>(r.get_ui())};
}

GfElem FiniteField::generator() const {
    if (t_->k == 1) return {0};
    return {t_->p};
}

GfElem FiniteField::element(std::uint32_t index) const {
    if (index >= t_->q) throw DomainError("field element index out of range");
    return {index};
}

GfElem FiniteField::from_digits(std::span<const std::uint32_t> digits) const {
    return {t_->from_digits(Digits(digits.begin(), digits.end()))};
}

std::vector<std::uint32_t> FiniteField::digits(GfElem a) const { return t_->to_digits(a.value); }

GfElem FiniteField::add(GfElem a, GfElem b) const {
    const auto& t = *t_;
    if (t.k == 1) {
        const std::uint64_t s = std::uint64_t{a.value} + b.value;
        return {static_cast<std::uint32_t>(s >= t.p ? s - t.p : s)};
    }
    if (t.p == 2) return {a.value ^ b.value};
    std::uint32_t out = 0;
    std::uint32_t x = a.value;
    std::uint32_t y = b.value;
    for (unsigned i = 0; i < t.k; ++i) {
        std::uint32_t d = x % t.p + y % t.p;
        if (d >= t.p) d -= t.p;
        out += d * t.pow_p[i];
        x /= t.p;
        y /= t.p;
    }
    return {out};
}

GfElem FiniteField::neg(GfElem a) const {
    const auto& t = *t_;
    if (t.k == 1) return {a.value == 0 ? 0 : t.p - a.value};
    if (t.p == 2) return a;
    std::uint32_t out = 0;
    std::uint32_t x = a.value;
    for (unsigned i = 0; i < t.k; ++i) {
        const std::uint32_t d = x % t.p;
        out += (d == 0 ? 0 : t.p - d) * t.pow_p[i];
        x /= t.p;
    }
    return {out};
}

GfElem FiniteField::sub(GfElem a, GfElem b) const { return add(a, neg(b)); }

GfElem FiniteField::mul(GfElem a, GfElem b) const {
    const auto& t = *t_;
    if (t.k == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % t.p)};
    if (a.value == 0 || b.value == 0) return {0};
    std::uint64_t e = std::uint64_t{t.log_table[a.value]} + t.log_table[b.value];
    const std::uint64_t group = t.q - 1;
    if (e >= group) e -= group;
    return {t.exp_table[e]};
}

GfElem FiniteField::inv(GfElem a) const {
    const auto& t = *t_;
    if (a.value == 0) throw DomainError("inverse of zero in F_" + std::to_string(t.q));
    if (t.k == 1) return pow(a, static_cast<std::uint64_t>(t.p - 2));
    const std::uint32_t group = t.q - 1;
    const std::uint32_t l = t.log_table[a.value];
    return {t.exp_table[l == 0 ? 0 : group - l]};
}

GfElem FiniteField::pow(GfElem a, std::uint64_t e) const {
    const auto& t = *t_;
    if (e == 0) return one();
    if (a.value == 0) return zero();
    if (t.k > 1) {
        const std::uint64_t group = t.q - 1;
        const std::uint64_t l = (std::uint64_t{t.log_table[a.value]} * (e % group)) % group;
        return {t.exp_table[l]};
    }
    std::uint64_t result = 1;
    std::uint64_t base = a.value;
    while (e > 0) {
        if (e & 1ULL) result = result * base % t.p;
        e >>= 1;
        base = base * base % t.p;
    }
    return {static_cast<std::uint32_t>(result)};
}

GfElem FiniteField::pow(GfElem a, const Integer& e) const {
    if (sgn(e) < 0) return pow(inv(a), Integer(-e));
    if (a.value == 0) return sgn(e) == 0 ? one() : zero();
    const Integer reduced = e % Integer(t_->q - 1);
    if (sgn(e) > 0 && sgn(reduced) == 0) return one();
    return pow(a, static_cast<std::uint64_t>(reduced.get_ui()));
}

GfElem FiniteField::pth_root(GfElem a) const {
    std::uint64_t e = 1;
    for (unsigned i = 1; i < t_->k; ++i) e *= t_->p;
    return pow(a, e);
}

std::string FiniteField::to_string(GfElem a) const {
    const auto& t = *t_;
    if (t.k == 1) return std::to_string(a.value);
    const Digits d = t.to_digits(a.value);
    std::string out;
    for (unsigned i = t.k; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (i == 0)
            out += std::to_string(d[i]);
        else if (d[i] == 1)
            out += mono;
        else
            out += std::to_string(d[i]) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

bool FiniteField::operator==(const FiniteField& other) const {
    return t_ == other.t_ || (t_->p == other.t_->p && t_->modulus == other.t_->modulus);
}

}  // namespace ramlab
