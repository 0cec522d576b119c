// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramlab/arith/parse.hpp"
#include "ramlab/errors.hpp"
#include "ramlab/identity/identity.hpp"
#include "ramlab/localfield/local_poly.hpp"
#include "ramlab/schmidt/schmidt.hpp"
#include "ramlab/valgroup/ordered_group.hpp"

using namespace ramlab;

namespace {

using EF = std::vector<std::pair<long, long>>;

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Accumulates failures; the first few are kept for the report line.
class Tally {
   public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    long checks() const { return checks_; }
    long failures() const { return failures_; }
    Verdict verdict(const std::string& summary) const {
        std::ostringstream os;
        os << summary << " [" << checks_ - failures_ << "/" << checks_ << " checks]";
        if (failures_ > 0) os << " first failures: " << notes_;
        return {failures_ == 0, os.str()};
    }

   private:
    long checks_ = 0;
    long failures_ = 0;
    std::string notes_;
};

EF ef_of(const std::vector<RamifiedPrime>& ps) {
    EF out;
    for (const auto& p : ps) out.emplace_back(p.e, p.f);
    std::sort(out.begin(), out.end());
    return out;
}

std::string ef_string(const EF& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::string("(") + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
    }
    return s + "]";
}

Poly<IntegerRing> zpoly(const std::string& s) { return to_integer_poly(parse_text_poly(s)); }

// Problem corpora shared by several criteria.

struct ZCase {
    Poly<IntegerRing> f;
    Integer p;
};

struct FqCase {
    unsigned q;
    Poly<FqPolyRing> f;
    GfPoly pi;
};

struct Row {
    std::string name;
    long degree = 0;
    std::optional<IdentityReport> report;
    std::string error;
};

bool small_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<ZCase> z_corpus() {
    std::mt19937_64 rng(1);
    std::vector<long> primes;
    for (long p = 2; p < 200; ++p) {
        if (small_prime(p)) primes.push_back(p);
    }
    std::vector<ZCase> out;
    int polys = 0;
    while (out.size() < 240 || polys < 40) {
        const int deg = 2 + static_cast<int>(rng() % 4);
        std::vector<Integer> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng() % 41) - 20);
        c.emplace_back(1);
        const Poly<IntegerRing> f(IntegerRing{}, c);
        const Integer disc = discriminant(f);
        if (disc == 0 || !irreducibility_witnessed(f)) continue;
        ++polys;
        std::vector<long> others;
        for (long p : primes) {
            const bool divides = mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
            if (divides && p <= 50) out.push_back({f, Integer(p)});
            if (!divides) others.push_back(p);
        }
        std::shuffle(others.begin(), others.end(), rng);
        for (std::size_t i = 0; i < 5 && i < others.size(); ++i) out.push_back({f, Integer(others[i])});
    }
    return out;
}

GfPoly random_t_poly(const FiniteField& fq, unsigned max_deg, std::mt19937_64& rng) {
    std::vector<GfElem> c;
    const unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
    for (unsigned i = 0; i <= d; ++i) c.push_back(fq.element(static_cast<std::uint32_t>(rng() % fq.order())));
    return GfPoly(fq, c);
}

std::vector<GfPoly> monic_irreducibles(const FiniteField& fq, unsigned d) {
    std::vector<GfPoly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= fq.order();
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<GfElem> c;
        std::uint64_t x = code;
        for (unsigned i = 0; i < d; ++i) {
            c.push_back(fq.element(static_cast<std::uint32_t>(x % fq.order())));
            x /= fq.order();
        }
        c.push_back(fq.one());
        GfPoly g(fq, c);
        if (is_irreducible(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<FqCase> fq_corpus() {
    std::mt19937_64 rng(2);
    std::vector<FqCase> out;
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
        const unsigned p = q == 4 ? 2 : q == 9 ? 3 : q;
        const unsigned k = q == 4 || q == 9 ? 2 : 1;
        const auto fq = FiniteField::get(p, k);
        const FqPolyRing ring(fq);
        std::vector<GfPoly> primes, all;
        for (unsigned d = 1; d <= 2; ++d) {
            auto of_degree = monic_irreducibles(fq, d);
            all.insert(all.end(), of_degree.begin(), of_degree.end());
            std::shuffle(of_degree.begin(), of_degree.end(), rng);
            for (std::size_t i = 0; i < 3 && i < of_degree.size(); ++i) primes.push_back(of_degree[i]);
        }
        int made = 0;
        while (made < 14) {
            const int deg = 2 + static_cast<int>(rng() % 3);
            std::vector<GfPoly> c;
            for (int i = 0; i < deg; ++i) c.push_back(random_t_poly(fq, 2, rng));
            c.push_back(ring.one());
            const Poly<FqPolyRing> f(ring, c);
            if (f.derivative().is_zero() || discriminant(f).is_zero() || !irreducibility_witnessed(f)) continue;
            ++made;
            // Every prime of degree <= 2 dividing the discriminant, plus the sampled ones.
            const GfPoly disc = discriminant(f);
            for (const auto& pi : all) {
                const bool sampled = std::find(primes.begin(), primes.end(), pi) != primes.end();
                if (sampled || divmod(disc, pi).second.is_zero()) out.push_back({q, f, pi});
            }
        }
    }
    return out;
}

template <class F>
Row make_row(std::string name, long degree, F&& compute) {
    Row r;
    r.name = std::move(name);
    r.degree = degree;
    try {
        r.report = compute();
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

struct Corpora {
    std::vector<ZCase> z;
    std::vector<FqCase> fq;
    std::vector<Row> z_rows;
    std::vector<Row> fq_rows;
    double z_seconds = 0;
    double fq_seconds = 0;
};

double since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

const Corpora& corpora() {
    static const Corpora c = [] {
        Corpora out;
        auto t0 = std::chrono::steady_clock::now();
        out.z = z_corpus();
        for (const auto& cs : out.z) {
            out.z_rows.push_back(make_row(cs.f.to_string() + " at " + cs.p.get_str(), cs.f.degree(),
                                          [&] { return check_identity(cs.f, cs.p, kDefaultPrecision); }));
        }
        out.z_seconds = since(t0);
        t0 = std::chrono::steady_clock::now();
        out.fq = fq_corpus();
        for (const auto& cs : out.fq) {
            out.fq_rows.push_back(make_row("q=" + std::to_string(cs.q) + " " + cs.f.to_string() + " at " +
                                               cs.pi.to_string("t"),
                                           cs.f.degree(), [&] { return check_identity(cs.f, cs.pi, kDefaultPrecision); }));
        }
        out.fq_seconds = since(t0);
        return out;
    }();
    return c;
}

// 1. Both sides of the local identity agree on the integer corpus.
Verdict criterion_1() {
    const auto& c = corpora();
    Tally t;
    std::set<std::string> polys;
    long certified = 0, ramified = 0;
    for (const auto& r : c.z_rows) {
        polys.insert(r.name.substr(0, r.name.rfind(" at ")));
        t.check(r.error.empty(), r.name + ": " + r.error);
        if (!r.report) continue;
        t.check(r.report->caveats.empty(), r.name + ": irreducibility not witnessed");
        if (!r.report->certified) continue;
        ++certified;
        if (std::any_of(r.report->primes.begin(), r.report->primes.end(), [](const RamifiedPrime& P) { return P.e > 1; })) {
            ++ramified;
        }
        t.check(r.report->lhs == r.report->rhs, r.name + ": lhs " + std::to_string(r.report->lhs) + " != rhs " +
                                                    std::to_string(r.report->rhs));
    }
    t.check(certified >= 200, "only " + std::to_string(certified) + " certified reports");
    t.check(c.z_seconds < 120, "corpus took " + std::to_string(c.z_seconds) + "s");
    char buf[200];
    std::snprintf(buf, sizeof buf, "lhs = rhs on %ld certified reports, %ld ramified (%zu polynomials, %zu problems, %.2fs)",
                  certified, ramified, polys.size(), c.z_rows.size(), c.z_seconds);
    return t.verdict(buf);
}

// 2. Sum of e*f equals the degree over Z and F_q[t].
Verdict criterion_2() {
    const auto& c = corpora();
    Tally t;
    std::set<unsigned> qs;
    for (const auto& cs : c.fq) qs.insert(cs.q);
    long ramified = 0;
    for (const auto& r : c.fq_rows) {
        if (r.report && std::any_of(r.report->primes.begin(), r.report->primes.end(),
                                    [](const RamifiedPrime& P) { return P.e > 1; })) {
            ++ramified;
        }
    }
    for (const auto* rows : {&c.z_rows, &c.fq_rows}) {
        for (const auto& r : *rows) {
            t.check(r.error.empty(), r.name + ": " + r.error);
            if (!r.report) continue;
            t.check(r.report->lhs == r.degree, r.name + ": sum e f = " + std::to_string(r.report->lhs));
            t.check(r.report->classical, r.name + ": classical verdict false");
        }
    }
    t.check(qs == std::set<unsigned>{2, 3, 4, 5, 9}, "function-field corpus misses a q");
    char buf[200];
    std::snprintf(buf, sizeof buf, "sum e f = n on %zu integer and %zu function-field reports, %ld ramified (%.2fs)",
                  c.z_rows.size(), c.fq_rows.size(), ramified, c.fq_seconds);
    return t.verdict(buf);
}

// Oracles for the golden splittings.

bool eisenstein(const Poly<IntegerRing>& f, const Integer& p) {
    const long n = f.degree();
    if (f.coeff(static_cast<std::size_t>(n)) != 1) return false;
    for (long i = 0; i < n; ++i) {
        if (mpz_divisible_p(f.coeff(static_cast<std::size_t>(i)).get_mpz_t(), p.get_mpz_t()) == 0) return false;
    }
    const Integer p2 = p * p;
    return mpz_divisible_p(f.coeff(0).get_mpz_t(), p2.get_mpz_t()) == 0;
}

Poly<IntegerRing> shift(const Poly<IntegerRing>& f, long a) {
    // f(x + a) by Horner.
    const Poly<IntegerRing> xa(IntegerRing{}, {Integer(a), Integer(1)});
    Poly<IntegerRing> r(IntegerRing{}, {Integer(0)});
    for (long i = f.degree(); i >= 0; --i) r = r * xa + Poly<IntegerRing>(IntegerRing{}, {f.coeff(static_cast<std::size_t>(i))});
    return r;
}

// (multiplicity, degree) pattern of f mod p; squarefree means p does not divide the index.
EF kummer_pattern(const Poly<IntegerRing>& f, unsigned p) {
    const auto k = FiniteField::get(p);
    EF out;
    for (const auto& fe : factor_finite_field(f.map(k, [&](const Integer& c) { return k.from_integer(c); }))) {
        out.emplace_back(fe.multiplicity, fe.factor.degree());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct 2-adic roots of f seen as clusters of roots mod 2^k, compared at 2^(k/2).
long two_adic_root_clusters(const Poly<IntegerRing>& f, unsigned k) {
    const long mod = 1L << k;
    std::set<long> clusters;
    for (long r = 0; r < mod; ++r) {
        Integer v = 0;
        for (long i = f.degree(); i >= 0; --i) v = v * r + f.coeff(static_cast<std::size_t>(i));
        if (mpz_divisible_2exp_p(v.get_mpz_t(), k) != 0) clusters.insert(r % (1L << (k / 2)));
    }
    return static_cast<long>(clusters.size());
}

// Characteristic polynomial of multiplication by a in Q[x]/(f), low to high.
std::vector<Rational> charpoly_in(const std::vector<Rational>& a, const Poly<IntegerRing>& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    auto mulmod = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        std::vector<Rational> prod(2 * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) prod[i + j] += u[i] * v[j];
        }
        for (std::size_t d = 2 * n - 1; d >= n; --d) {
            const Rational c = prod[d];
            for (std::size_t i = 0; i <= n; ++i) prod[d - n + i] -= c * Rational(f.coeff(i));
        }
        prod.resize(n);
        return prod;
    };
    // M[i][j] = coefficient of x^i in a * x^j.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> xj(n, Rational(0));
        xj[j] = 1;
        const auto col = mulmod(a, xj);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    // Faddeev-LeVerrier.
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = 1;
    std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // mk = M * (mk_prev + c_{n-k+1} I)
        std::vector<std::vector<Rational>> prev = mk;
        for (std::size_t i = 0; i < n; ++i) prev[i][i] += coeff[n - k + 1];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += m[i][l] * prev[l][j];
                mk[i][j] = s;
            }
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
        coeff[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return coeff;
}

// 3. Golden splittings.
Verdict criterion_3() {
    Tally t;
    auto golden = [&](const Poly<IntegerRing>& f, long p, const EF& expected, const EF& oracle) {
        const auto [sum, primes] = lhs_sum(f, Integer(p));
        const EF got = ef_of(primes);
        t.check(oracle == expected, f.to_string() + " at " + std::to_string(p) + ": oracle " + ef_string(oracle));
        t.check(got == expected, f.to_string() + " at " + std::to_string(p) + ": got " + ef_string(got));
        t.check(sum == f.degree(), f.to_string() + ": sum " + std::to_string(sum));
    };
    const auto x2p1 = zpoly("x^2+1");
    t.check(eisenstein(shift(x2p1, 1), Integer(2)), "x^2+1 shifted is not Eisenstein at 2");
    golden(x2p1, 2, {{2, 1}}, eisenstein(shift(x2p1, 1), Integer(2)) ? EF{{2, 1}} : EF{});
    golden(x2p1, 3, {{1, 2}}, kummer_pattern(x2p1, 3));
    golden(x2p1, 5, {{1, 1}, {1, 1}}, kummer_pattern(x2p1, 5));

    const auto x3m2 = zpoly("x^3-2");
    golden(x3m2, 2, {{3, 1}}, eisenstein(x3m2, Integer(2)) ? EF{{3, 1}} : EF{});

    // Index divisor: 2 splits completely although f mod 2 = x^2 (x + 1).
    const auto ded = zpoly("x^3-x^2-2x-8");
    const long roots = two_adic_root_clusters(ded, 12);
    golden(ded, 2, {{1, 1}, {1, 1}, {1, 1}}, roots == 3 ? EF{{1, 1}, {1, 1}, {1, 1}} : EF{});
    const auto o = round2_pmaximal(equation_order(ded), Integer(2));
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < o.basis.rows(); ++i) basis.push_back(o.basis_string(i));
    t.check(basis == std::vector<std::string>{"1", "θ", "(θ^2 + θ)/2"}, "order basis differs");
    t.check(o.index() == 2, "index " + o.index().get_str());
    const auto cp = charpoly_in({Rational(0), Rational(1, 2), Rational(1, 2)}, ded);
    bool integral = true;
    for (const auto& c : cp) integral = integral && c.get_den() == 1;
    t.check(integral, "(θ^2 + θ)/2 is not integral");
    t.check(cp == std::vector<Rational>{Rational(-8), Rational(-10), Rational(-3), Rational(1)},
            "char poly of (θ^2 + θ)/2 differs");
    // disc(f) = [O : Z[θ]]^2 disc(O); an odd disc(O) confirms 2 is unramified.
    const Integer disc = discriminant(ded);
    t.check(disc == -2012 && mpz_divisible_ui_p(Integer(disc / 4).get_mpz_t(), 2) == 0, "disc(O) is even");

    for (unsigned p : {2u, 3u, 5u}) {
        const auto fp = FiniteField::get(p);
        const auto f = to_fq_t_poly(parse_text_poly("x^" + std::to_string(p) + " - t"), fp);
        const auto pi = to_fq_poly_in_t(parse_text_poly("t"), fp);
        const auto [sum, primes] = lhs_sum(f, pi);
        // Eisenstein at t: the constant -t has t-valuation exactly 1.
        const bool eis = f.coeff(0).degree() == 1 && fp.is_zero(f.coeff(0).coeff(0));
        t.check(eis, "x^p - t not Eisenstein");
        t.check(ef_of(primes) == EF{{static_cast<long>(p), 1}}, "x^" + std::to_string(p) + " - t: got " +
                                                                      ef_string(ef_of(primes)));
        t.check(sum == static_cast<long>(p), "x^p - t sum");
    }
    return t.verdict("golden splittings match independent oracles");
}

// 4. Schmidt model.
Verdict criterion_4() {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned p : {2u, 3u, 5u}) {
        for (long n : {6L * p, 10L * p}) {
            const auto model = build_model(p, n);
            const auto split = tensor_split(model);
            const auto rep = strict_inequality_report(model);
            const std::string tag = "p=" + std::to_string(p) + " N=" + std::to_string(n);
            t.check(split.verified, tag + ": (x-c)^p != x^p - s");
            t.check(rep.lhs == 1 && rep.lhs < rep.degree && rep.degree == static_cast<long>(p), tag + ": lhs");
            t.check(!rep.classical, tag + ": classical identity should fail");
            t.check(rep.rhs == 1 && rep.eq11, tag + ": rhs");
            t.check(rep.inequality, tag + ": inequality");
            t.check(rep.radical_dim + rep.rhs == static_cast<long>(p), tag + ": radical bookkeeping");
            // Oracle for the witness chain: the next exponent of c past m.
            std::vector<long> exps;
            for (long i = 0; i <= model.c.degree(); ++i) {
                if (!model.c.ring().is_zero(model.c.coeff(static_cast<std::size_t>(i)))) exps.push_back(i);
            }
            for (long m = 0; m <= n / static_cast<long>(p); ++m) {
                const auto w = residue_witness(model, m);
                const auto next = std::upper_bound(exps.begin(), exps.end(), m);
                const long expected = next == exps.end() ? n + 1 : *next;
                t.check(w.holds() && w.w_lower == expected, tag + ": witness at m=" + std::to_string(m));
            }
        }
    }
    const double secs = since(t0);
    t.check(secs < 1.0, "took " + std::to_string(secs) + "s");
    char buf[120];
    std::snprintf(buf, sizeof buf, "sum e f = 1 < p, rhs = 1, witness chain to N/p for p in {2,3,5} (%.3fs)", secs);
    return t.verdict(buf);
}

// Exact rational solve for membership of v in the lattice spanned by cols.
bool lattice_member(const std::vector<GroupElement>& cols, const GroupElement& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(cols[j][i]);
        a[i][n] = Rational(v[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Rational x = a[i][n] / a[i][i];
        if (x.get_den() != 1) return false;
    }
    return true;
}

Integer det_abs(const std::vector<GroupElement>& cols) {
    const std::size_t n = cols.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(cols[j][i]);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return abs(det.get_num());
}

// Upward-closed subsets M of the window [1, w] with every multiple of m in M,
// found by a depth-first search over membership decisions.
long windowed_major_sets(long m, long w) {
    std::function<long(long, bool)> go = [&](long x, bool inside) -> long {
        if (x > w) return 1;
        long total = 0;
        // x in M
        total += go(x + 1, true);
        // x not in M: only possible before M has started and when x is not in H.
        if (!inside && x % m != 0) total += go(x + 1, false);
        return total;
    };
    return go(1, false);
}

// 5. Initial index.
Verdict criterion_5() {
    Tally t;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coord(-9, 9);
    int done = 0;
    while (done < 300) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
        const auto g = OrderedGroup::lex(n);
        std::vector<GroupElement> cols;
        for (std::size_t j = 0; j < n; ++j) {
            GroupElement v;
            for (std::size_t i = 0; i < n; ++i) v.emplace_back(coord(rng));
            cols.push_back(v);
        }
        const Integer det = det_abs(cols);
        if (det == 0) continue;
        ++done;
        const auto res = initial_index(g, FiniteIndexSubgroup(g, cols));
        t.check(res.index == det, "index mismatch");
        t.check(mpz_divisible_p(res.index.get_mpz_t(), res.epsilon.get_mpz_t()) != 0, "epsilon does not divide index");
        Integer k = 1;
        GroupElement probe(n, Integer(0));
        while (true) {
            probe[n - 1] = k;
            if (lattice_member(cols, probe)) break;
            ++k;
        }
        t.check(res.epsilon == k, "epsilon " + res.epsilon.get_str() + " vs scan " + k.get_str());
    }
    const auto z = OrderedGroup::lex(1);
    for (long m = 1; m <= 50; ++m) {
        const long count = windowed_major_sets(m, 3 * m);
        const auto eps = initial_index(z, FiniteIndexSubgroup(z, {GroupElement{Integer(m)}})).epsilon;
        t.check(count == m && eps == m, "m=" + std::to_string(m) + ": enumerator " + std::to_string(count) +
                                            ", epsilon " + eps.get_str());
    }
    const auto r2 = OrderedGroup::real_embedded(2);
    for (int i = 0; i < 50; ++i) {
        std::vector<GroupElement> cols{{Integer(coord(rng)), Integer(coord(rng))}, {Integer(coord(rng)), Integer(coord(rng))}};
        const Integer det = det_abs(cols);
        if (det == 0) continue;
        const auto res = initial_index(r2, FiniteIndexSubgroup(r2, cols));
        t.check(res.epsilon == 1 && !res.least_positive && res.index == det, "real embedded subgroup");
    }
    return t.verdict("epsilon | index on 300 lex subgroups, epsilon(Z,mZ) = m for m <= 50, epsilon = 1 on Z+Z*sqrt(2)");
}

// 6. Finite-module conditions agree.
Verdict criterion_6() {
    const auto& c = corpora();
    Tally t;
    long reports = 0;
    for (const auto* rows : {&c.z_rows, &c.fq_rows}) {
        for (const auto& r : *rows) {
            if (!r.report) {
                t.check(false, r.name + ": " + r.error);
                continue;
            }
            ++reports;
            t.check(r.report->e5_c == r.report->e5_d, r.name + ": e5_c != e5_d");
            t.check(r.report->e5_c && r.report->e5_d, r.name + ": condition false");
        }
    }
    return t.verdict("e5_c <=> e5_d, both true, on " + std::to_string(reports) + " reports");
}

// 7. Fundamental inequality and the radical bound.
Verdict criterion_7() {
    const auto& c = corpora();
    Tally t;
    long reports = 0;
    for (const auto* rows : {&c.z_rows, &c.fq_rows}) {
        for (const auto& r : *rows) {
            if (!r.report) {
                t.check(false, r.name + ": " + r.error);
                continue;
            }
            ++reports;
            t.check(r.report->lhs <= r.degree, r.name + ": lhs > n");
            t.check(r.report->rhs <= r.degree, r.name + ": rhs > n");
            t.check(r.report->inequality, r.name + ": inequality verdict");
        }
    }
    for (unsigned p : {2u, 3u, 5u}) {
        const auto rep = strict_inequality_report(build_model(p, 6 * static_cast<long>(p)));
        ++reports;
        t.check(rep.lhs <= rep.degree && rep.rhs <= rep.degree && rep.inequality, "schmidt p=" + std::to_string(p));
    }
    return t.verdict("lhs <= n and rhs <= n on " + std::to_string(reports) + " reports including Schmidt");
}

// Integer representative of an integral p-adic element modulo p^k.
Integer to_integer_mod(const LocalElement& a, const Integer& p, long k) {
    Integer mod;
    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    if (a.is_zero()) return 0;
    Integer pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(a.val));
    Integer v = a.unit * pv;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return v;
}

GfPoly random_monic(const FiniteField& f, int deg, std::mt19937_64& rng) {
    std::vector<GfElem> c;
    for (int i = 0; i < deg; ++i) c.push_back(f.element(static_cast<std::uint32_t>(rng() % f.order())));
    c.push_back(f.one());
    return GfPoly(f, c);
}

std::vector<Rational> slopes(const NewtonPolygon& np) {
    std::vector<Rational> out;
    for (const auto& s : np.segments) {
        for (long i = 0; i < s.length; ++i) out.push_back(s.slope);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// 8. Kernel checks.
Verdict criterion_8() {
    Tally t;
    std::mt19937_64 rng(8);

    // Hensel lifting against integer arithmetic modulo p^target.
    for (int done = 0, trial = 0; done < 200; ++trial) {
        const Integer p = std::vector<int>{2, 3, 5, 7}[trial % 4];
        const auto ctx = CompletionContext::p_adic(p, 24);
        const auto& k = ctx.residue_field();
        const long target = static_cast<long>(rng() % 20) + 2;
        const int total = static_cast<int>(rng() % 3) + 2;
        const int dg = static_cast<int>(rng() % static_cast<unsigned>(total - 1)) + 1;
        const auto g0 = random_monic(k, dg, rng);
        const auto h0 = random_monic(k, total - dg, rng);
        if (poly_gcd(g0, h0).degree() != 0) continue;
        ++done;
        std::vector<Integer> fc(static_cast<std::size_t>(total) + 1);
        const auto prod = g0 * h0;
        for (int i = 0; i <= total; ++i) {
            fc[static_cast<std::size_t>(i)] = Integer(prod.coeff(static_cast<std::size_t>(i)).value);
            if (i < total) fc[static_cast<std::size_t>(i)] += p * Integer(static_cast<long>(rng() % 1000));
        }
        const Poly<IntegerRing> fz(IntegerRing{}, fc);
        auto [g, h] = hensel_lift(embed(fz, ctx), g0, h0, target);
        Integer mod;
        mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(target));
        bool ok = g.degree() + h.degree() == total;
        for (int i = 0; ok && i <= total; ++i) {
            Integer acc = 0;
            for (int j = 0; j <= i; ++j) {
                if (j > g.degree() || i - j > h.degree()) continue;
                acc += to_integer_mod(g.coeff(static_cast<std::size_t>(j)), p, target) *
                       to_integer_mod(h.coeff(static_cast<std::size_t>(i - j)), p, target);
            }
            acc -= fc[static_cast<std::size_t>(i)];
            mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
            ok = acc == 0;
        }
        t.check(ok, "hensel product congruence");
    }

    // Newton polygon slopes are additive under products.
    for (int trial = 0; trial < 200; ++trial) {
        const Integer p = std::vector<int>{2, 3, 5, 7}[trial % 4];
        const auto ctx = CompletionContext::p_adic(p, 64);
        auto random_poly = [&]() {
            std::vector<Integer> c;
            const int deg = static_cast<int>(rng() % 4) + 1;
            for (int i = 0; i <= deg; ++i) {
                Integer pw;
                mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), rng() % 5);
                c.push_back(Integer(static_cast<long>(rng() % 6) + 1) * pw);
            }
            return Poly<IntegerRing>(IntegerRing{}, c);
        };
        const auto a = random_poly(), b = random_poly();
        auto merged = slopes(newton_polygon(embed(a, ctx)));
        const auto sb = slopes(newton_polygon(embed(b, ctx)));
        merged.insert(merged.end(), sb.begin(), sb.end());
        std::sort(merged.begin(), merged.end());
        t.check(slopes(newton_polygon(embed(a * b, ctx))) == merged, "newton polygon additivity");
    }

    // p-th roots invert Frobenius.
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        const auto c = CompletionContext::laurent(p, 80);
        const auto& k = c.residue_field();
        for (int i = 0; i < 40; ++i) {
            std::vector<GfElem> d;
            for (int j = 0; j < 30; ++j) d.push_back(k.element(static_cast<std::uint32_t>(rng() % p)));
            const auto b = c.from_series(static_cast<long>(rng() % 7) - 3, d, 80);
            if (b.is_zero()) continue;
            const auto root = pth_root(ring_pow(c, b, p), c);
            t.check(c.equal(root, c.truncate(b, root.prec)), "pth_root round trip");
        }
    }

    // The radical of a radical is itself.
    const auto f3 = FiniteField::get(3);
    for (int trial = 0; trial < 60; ++trial) {
        const bool padic = trial % 2 == 0;
        const auto ctx = padic ? CompletionContext::p_adic(3, 64) : CompletionContext::laurent(3, 64);
        LocalPolynomial f = LocalPolynomial::constant(ctx, ctx.one());
        for (int j = 0; j < 3; ++j) {
            const long root = static_cast<long>(rng() % 7);
            const unsigned m = static_cast<unsigned>(rng() % 2) + 1;
            const LocalElement r =
                padic ? ctx.from_int(root) : ctx.from_fq_poly(GfPoly(f3, {f3.from_int(root), f3.from_int(root + 1)}));
            for (unsigned i = 0; i < m; ++i) f = f * LocalPolynomial(ctx, {ctx.neg(r), ctx.one()});
        }
        const auto res = radical_degree(f);
        const auto again = radical_degree(res.radical);
        t.check(res.certified && again.certified && again.degree == res.degree && res.degree <= f.degree(),
                "radical idempotence");
    }

    // Decomposition agrees with the factorization mod p when p does not divide the index.
    long kummer = 0;
    for (const auto& cs : corpora().z) {
        const auto o = round2_pmaximal(equation_order(cs.f), cs.p);
        if (o.index() != 1) continue;
        ++kummer;
        const EF expected = kummer_pattern(cs.f, static_cast<unsigned>(cs.p.get_ui()));
        t.check(ef_of(decompose_prime(o)) == expected, cs.f.to_string() + " at " + cs.p.get_str() + ": Dedekind-Kummer");
    }
    t.check(kummer >= 150, "too few Dedekind-Kummer instances");
    return t.verdict("hensel, newton polygon, pth_root, radical idempotence, Dedekind-Kummer on " +
                     std::to_string(kummer) + " primes");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
        {"identity over Z corpus", criterion_1},
        {"classical identity on excellent bases", criterion_2},
        {"golden splittings", criterion_3},
        {"Schmidt strict inequality", criterion_4},
        {"initial index", criterion_5},
        {"finite-module conditions", criterion_6},
        {"fundamental inequality", criterion_7},
        {"kernel checks", criterion_8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << v.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
