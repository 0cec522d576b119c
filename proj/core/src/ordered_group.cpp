#include "ramlab/valgroup/ordered_group.hpp"

#include <cctype>

#include "ramlab/errors.hpp"

namespace ramlab {

const char* to_string(Order o) noexcept {
    switch (o) {
        case Order::LT: return "LT";
        case Order::EQ: return "EQ";
        case Order::GT: return "GT";
    }
    return "?";
}

OrderedGroup OrderedGroup::lex(std::size_t n) {
    if (n == 0) throw ValidationError("a lexicographic group needs rank at least 1");
    return OrderedGroup(Kind::LexZ, n, 0);
}

OrderedGroup OrderedGroup::real_embedded(const Integer& d) {
    if (sgn(d) <= 0) throw ValidationError("sqrt(d) needs d > 0");
    if (mpz_perfect_square_p(d.get_mpz_t()) != 0) throw ValidationError("d = " + d.get_str() + " is a square");
    return OrderedGroup(Kind::RealEmbedded, 2, d);
}

std::string OrderedGroup::to_string() const {
    if (kind_ == Kind::RealEmbedded) return "Z+Z*sqrt(" + d_.get_str() + ")";
    if (rank_ == 1) return "Z";
    return "Z^" + std::to_string(rank_) + "lex";
}

std::string element_to_string(const GroupElement& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

Subgroup::Subgroup(std::size_t n, const std::vector<GroupElement>& generators) : n_(n) {
    for (const auto& g : generators) {
        if (g.size() != n) throw ValidationError("generator " + element_to_string(g) + " has the wrong length");
    }
    hnf_ = hermite_rows(IntegerRing{}, generators, n);
}

std::vector<GroupElement> Subgroup::generators() const {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < hnf_.rows(); ++i) out.push_back(hnf_.row(i));
    return out;
}

namespace {

// Column of the last nonzero entry of an HNF row.
std::size_t pivot_of(const Matrix<Integer>& m, std::size_t i) {
    for (std::size_t j = m.cols(); j-- > 0;) {
        if (sgn(m(i, j)) != 0) return j;
    }
    return m.cols();
}

}  // namespace

bool Subgroup::contains(const GroupElement& v) const {
    if (v.size() != n_) return false;
    GroupElement w = v;
    std::size_t row = hnf_.rows();
    for (std::size_t j = n_; j-- > 0;) {
        if (row > 0 && pivot_of(hnf_, row - 1) == j) {
            --row;
            const Integer& p = hnf_(row, j);
            if (sgn(w[j]) == 0) continue;
            if (!mpz_divisible_p(w[j].get_mpz_t(), p.get_mpz_t())) return false;
            const Integer q = w[j] / p;
            for (std::size_t c = 0; c <= j; ++c) w[c] -= q * hnf_(row, c);
        } else if (sgn(w[j]) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Integer> Subgroup::index() const {
    if (hnf_.rows() != n_) return std::nullopt;
    Integer d = 1;
    for (std::size_t i = 0; i < n_; ++i) d *= hnf_(i, i);
    return abs(d);
}

std::string Subgroup::to_string() const {
    if (hnf_.rows() == 0) return "0";
    std::string out = "<";
    for (std::size_t i = 0; i < hnf_.rows(); ++i) {
        if (i) out += ", ";
        out += element_to_string(hnf_.row(i));
    }
    return out + ">";
}

bool Subgroup::operator==(const Subgroup& other) const {
    if (n_ != other.n_ || hnf_.rows() != other.hnf_.rows()) return false;
    for (std::size_t i = 0; i < hnf_.rows(); ++i) {
        if (hnf_.row(i) != other.hnf_.row(i)) return false;
    }
    return true;
}

FiniteIndexSubgroup::FiniteIndexSubgroup(OrderedGroup g, std::vector<GroupElement> columns)
    : parent(std::move(g)), basis(std::move(columns)) {
    if (basis.size() != parent.rank()) throw ValidationError("need exactly rank(G) generators");
    auto m = Matrix<Integer>::from_rows(basis, parent.rank());
    if (sgn(determinant(IntegerRing{}, m)) == 0) throw ValidationError("subgroup generators are dependent");
}

Order compare(const OrderedGroup& g, const GroupElement& a, const GroupElement& b) {
    if (a.size() != g.rank() || b.size() != g.rank()) throw DomainError("element outside " + g.to_string());
    if (g.kind() == OrderedGroup::Kind::LexZ) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return Order::LT;
            if (a[i] > b[i]) return Order::GT;
        }
        return Order::EQ;
    }
    // a - b = x - y*sqrt(d).
    const Integer x = a[0] - b[0];
    const Integer y = b[1] - a[1];
    const int sx = sgn(x);
    const int sy = sgn(y);
    int s = 0;
    if (sy == 0) {
        s = sx;
    } else if (sx == 0) {
        s = -sy;
    } else if (sx != sy) {
        s = sx;
    } else {
        // Same signs: compare x^2 with y^2 d.
        const int c = cmp(x * x, y * y * g.radicand());
        s = sx > 0 ? c : -c;
    }
    return s < 0 ? Order::LT : (s > 0 ? Order::GT : Order::EQ);
}

long height(const OrderedGroup& g) {
    return g.kind() == OrderedGroup::Kind::LexZ ? static_cast<long>(g.rank()) : 1;
}

namespace {

GroupElement unit_vector(std::size_t n, std::size_t k) {
    GroupElement e(n, Integer(0));
    e[k] = 1;
    return e;
}

Subgroup coordinate_subgroup(std::size_t n, std::size_t k) {
    std::vector<GroupElement> gens;
    for (std::size_t j = k; j < n; ++j) gens.push_back(unit_vector(n, j));
    return Subgroup(n, gens);
}

std::size_t leading_index(const GroupElement& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) return i;
    }
    return v.size();
}

GroupElement negated(GroupElement v) {
    for (auto& c : v) c = -c;
    return v;
}

}  // namespace

std::vector<Subgroup> isolated_subgroups(const OrderedGroup& g) {
    if (g.kind() != OrderedGroup::Kind::LexZ) throw DomainError("isolated chains are listed for lexicographic groups");
    const std::size_t n = g.rank();
    std::vector<Subgroup> out;
    for (std::size_t k = n + 1; k-- > 0;) {
        Subgroup h = coordinate_subgroup(n, k);
        if (convexity_witness(g, h)) throw NotIsolated("coordinate subgroup failed the convexity check");
        out.push_back(std::move(h));
    }
    return out;
}

std::optional<ConvexityWitness> convexity_witness(const OrderedGroup& g, const Subgroup& h) {
    const std::size_t n = g.rank();
    if (h.ambient_rank() != n) throw DomainError("subgroup lives in a different group");
    if (h.rank() == 0) return std::nullopt;
    if (g.kind() == OrderedGroup::Kind::RealEmbedded) {
        // Archimedean: only 0 and G are convex, and a unit vector outside H
        // lies below some multiple of |h|.
        if (h.index() == Integer(1)) return std::nullopt;
        GroupElement x = h.generators().front();
        if (compare(g, x, GroupElement(2, Integer(0))) == Order::LT) x = negated(x);
        for (const auto& y : {unit_vector(2, 0), unit_vector(2, 1)}) {
            if (h.contains(y)) continue;
            GroupElement m = x;
            while (compare(g, m, y) == Order::LT) {
                m[0] += x[0];
                m[1] += x[1];
            }
            return ConvexityWitness{m, y};
        }
        return std::nullopt;
    }
    // k is the smallest leading index in H.
    std::size_t k = n;
    GroupElement r;
    for (const auto& v : h.generators()) {
        const std::size_t li = leading_index(v);
        if (li < k) {
            k = li;
            r = v;
        }
    }
    if (sgn(r[k]) < 0) r = negated(r);
    std::size_t j = k;
    while (j < n && h.contains(unit_vector(n, j))) ++j;
    if (j == n) return std::nullopt;
    if (j > k) return ConvexityWitness{r, unit_vector(n, j)};
    if (r[k] >= 2) return ConvexityWitness{r, unit_vector(n, k)};
    // r = e_k + w with w != 0 supported past k and w outside H.
    GroupElement w = r;
    w[k] = 0;
    if (compare(g, w, GroupElement(n, Integer(0))) == Order::LT) w = negated(w);
    return ConvexityWitness{r, w};
}

OrderedGroup quotient_order(const OrderedGroup& g, const Subgroup& h) {
    if (g.kind() != OrderedGroup::Kind::LexZ) {
        if (h.rank() == 0) return g;
        if (!convexity_witness(g, h)) throw DomainError("the quotient by G is trivial");
    }
    if (auto w = convexity_witness(g, h)) {
        throw NotIsolated("0 <= " + element_to_string(w->y) + " <= " + element_to_string(w->x) + " with " +
                          element_to_string(w->x) + " in H but " + element_to_string(w->y) + " not in H");
    }
    const std::size_t k = g.rank() - h.rank();
    if (k == 0) throw DomainError("the quotient by G is trivial");
    return OrderedGroup::lex(k);
}

InitialIndexResult initial_index(const OrderedGroup& g, const FiniteIndexSubgroup& h) {
    if (!(h.parent == g)) throw DomainError("subgroup of a different group");
    const std::size_t n = g.rank();
    const Subgroup sub = h.subgroup();
    InitialIndexResult out{1, std::nullopt, *sub.index()};
    if (g.kind() == OrderedGroup::Kind::RealEmbedded) return out;
    // Reversing coordinates makes H meet the last axis in the first HNF row.
    std::vector<GroupElement> rev;
    for (const auto& b : h.basis) rev.emplace_back(b.rbegin(), b.rend());
    const auto m = hermite_rows(IntegerRing{}, rev, n);
    out.epsilon = abs(m(0, 0));
    out.least_positive = unit_vector(n, n - 1);
    return out;
}

namespace {

class Cursor {
   public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    bool accept(std::string_view lit) {
        skip();
        if (s_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view lit) {
        if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
    }
    Integer integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        std::string tok(s_.substr(start, pos_ - start));
        if (tok[0] == '+') tok.erase(0, 1);
        return Integer(tok);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(1, static_cast<int>(pos_) + 1, what);
    }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

OrderedGroup parse_group(std::string_view text) {
    Cursor c(text);
    c.expect("Z");
    if (c.accept("^")) {
        const Integer n = c.integer();
        c.accept("lex");
        if (!c.at_end()) c.fail("trailing input");
        if (n < 1 || n > 64) c.fail("rank out of range");
        return OrderedGroup::lex(n.get_ui());
    }
    if (c.accept("+")) {
        c.expect("Z");
        c.expect("*");
        c.expect("sqrt");
        c.expect("(");
        const Integer d = c.integer();
        c.expect(")");
        if (!c.at_end()) c.fail("trailing input");
        return OrderedGroup::real_embedded(d);
    }
    if (!c.at_end()) c.fail("trailing input");
    return OrderedGroup::lex(1);
}

std::vector<GroupElement> parse_generators(std::string_view text) {
    Cursor c(text);
    std::vector<GroupElement> out;
    c.expect("[");
    if (!c.accept("]")) {
        do {
            c.expect("[");
            GroupElement v;
            do {
                v.push_back(c.integer());
            } while (c.accept(","));
            c.expect("]");
            if (!out.empty() && v.size() != out.front().size()) c.fail("generators of different lengths");
            out.push_back(std::move(v));
        } while (c.accept(","));
        c.expect("]");
    }
    if (!c.at_end()) c.fail("trailing input");
    return out;
}

}  // namespace ramlab
