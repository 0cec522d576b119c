#include "ramlab/arith/parse.hpp"

#include <cctype>

#include "ramlab/errors.hpp"

namespace ramlab {

TextPoly TextPoly::constant(Rational c) {
    TextPoly p;
    p.add_term({0, 0, 0}, c);
    return p;
}

TextPoly TextPoly::variable(std::size_t index) {
    TextPoly p;
    Exponents e{0, 0, 0};
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

unsigned TextPoly::degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
    return d;
}

void TextPoly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

TextPoly TextPoly::operator+(const TextPoly& o) const {
    TextPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

TextPoly TextPoly::operator-() const {
    TextPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TextPoly TextPoly::operator*(const TextPoly& o) const {
    TextPoly out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
    return out;
}

TextPoly TextPoly::pow(unsigned e) const {
    TextPoly out = constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : s_(text) {}

    TextPoly parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        TextPoly p = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, static_cast<int>(pos_) + 1, what); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    TextPoly expr() {
        TextPoly acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    TextPoly term() {
        TextPoly acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                TextPoly d = unary();
                if (d.terms().size() != 1 || d.terms().begin()->first != TextPoly::Exponents{0, 0, 0}) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                acc = acc * TextPoly::constant(1 / d.terms().begin()->second);
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    TextPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    TextPoly power() {
        TextPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            const auto digits = s_.substr(start, pos_ - start);
            if (digits.size() > 4) fail("exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
        }
        return base;
    }

    TextPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TextPoly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return TextPoly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const auto name = s_.substr(start, pos_ - start);
            if (name == "x") return TextPoly::variable(0);
            if (name == "t") return TextPoly::variable(1);
            if (name == "a") return TextPoly::variable(2);
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

GfElem reduce_rational(const Rational& c, const FiniteField& fq) {
    const GfElem den = fq.from_integer(c.get_den());
    if (fq.is_zero(den)) throw ValidationError("coefficient denominator is divisible by the characteristic");
    return fq.div(fq.from_integer(c.get_num()), den);
}

}  // namespace

TextPoly parse_text_poly(std::string_view text) { return Parser(text).parse(); }

Poly<RationalField> to_rational_poly(const TextPoly& p) {
    if (p.uses(1) || p.uses(2)) throw ValidationError("polynomial over Q may only use x");
    std::vector<Rational> c(p.degree_in(0) + 1, 0);
    for (const auto& [e, v] : p.terms()) c[e[0]] += v;
    return Poly<RationalField>(RationalField{}, std::move(c));
}

Poly<IntegerRing> to_integer_poly(const TextPoly& p) {
    const auto q = to_rational_poly(p);
    std::vector<Integer> c;
    for (const auto& v : q.coeffs()) {
        if (v.get_den() != 1) throw ValidationError("coefficient " + v.get_str() + " is not an integer");
        c.push_back(v.get_num());
    }
    return Poly<IntegerRing>(IntegerRing{}, std::move(c));
}

Poly<FqPolyRing> to_fq_t_poly(const TextPoly& p, const FiniteField& fq) {
    if (p.uses(2) && fq.degree() == 1) throw ValidationError("identifier a needs a non-prime field F_q");
    const FqPolyRing ring(fq);
    std::vector<GfPoly> coeffs(p.degree_in(0) + 1, ring.zero());
    for (const auto& [e, v] : p.terms()) {
        GfElem c = fq.mul(reduce_rational(v, fq), fq.pow(fq.generator(), static_cast<std::uint64_t>(e[2])));
        coeffs[e[0]] = coeffs[e[0]] + GfPoly::monomial(fq, c, e[1]);
    }
    return Poly<FqPolyRing>(ring, std::move(coeffs));
}

GfPoly to_fq_poly_in_t(const TextPoly& p, const FiniteField& fq) {
    if (p.uses(0)) throw ValidationError("a prime of F_q[t] may not use x");
    const auto lifted = to_fq_t_poly(p, fq);
    return lifted.coeff(0);
}

}  // namespace ramlab
