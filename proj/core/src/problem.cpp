#include "ramlab/cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>

#include "ramlab/arith/parse.hpp"
#include "ramlab/errors.hpp"
#include "ramlab/globalorder/order.hpp"

namespace ramlab {

namespace {

struct Entry {
    std::string value;
    int line;
    int column;  // of the first character of the value text (after any quote)
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

void parse_line(std::string_view line, int lineno, std::map<std::string, Entry>& out) {
    std::size_t i = 0;
    auto col = [&](std::size_t at) { return static_cast<int>(at) + 1; };
    while (true) {
        while (i < line.size() && is_blank(line[i])) ++i;
        if (i == line.size()) return;
        if (line[i] == '#') return;
        const std::size_t key_start = i;
        while (i < line.size() && is_key_char(line[i])) ++i;
        if (i == key_start) throw ParseError(lineno, col(i), "expected a key");
        const std::string key(line.substr(key_start, i - key_start));
        if (i == line.size() || line[i] != '=') throw ParseError(lineno, col(i), "expected '=' after " + key);
        ++i;
        Entry field{"", lineno, 0};
        if (i < line.size() && line[i] == '"') {
            ++i;
            field.column = col(i);
            bool closed = false;
            while (i < line.size()) {
                const char c = line[i++];
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c == '\\') {
                    if (i == line.size() || (line[i] != '"' && line[i] != '\\')) {
                        throw ParseError(lineno, col(i - 1), "bad escape in quoted value");
                    }
                    field.value.push_back(line[i++]);
                } else {
                    field.value.push_back(c);
                }
            }
            if (!closed) throw ParseError(lineno, field.column - 1, "unterminated quoted value");
        } else {
            field.column = col(i);
            while (i < line.size() && !is_blank(line[i])) field.value.push_back(line[i++]);
            if (field.value.empty()) throw ParseError(lineno, col(i), "empty value for " + key);
        }
        if (i < line.size() && !is_blank(line[i])) throw ParseError(lineno, col(i), "expected blank after value");
        static const char* const known[] = {"base", "q", "poly", "prime", "precision", "mode"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw ParseError(lineno, col(key_start), "unknown key '" + key + "'");
        }
        if (out.count(key) != 0) throw ParseError(lineno, col(key_start), "repeated key '" + key + "'");
        out.emplace(key, std::move(field));
    }
}

long parse_long(const Entry& f, const char* what) {
    long v = 0;
    const char* b = f.value.data();
    const char* e = b + f.value.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) {
        throw ParseError(f.line, f.column + static_cast<int>(ptr - b), std::string(what) + " must be an integer");
    }
    return v;
}

// Re-anchors a polynomial syntax error at its position in the file.
TextPoly parse_poly_field(const Entry& f) {
    try {
        return parse_text_poly(f.value);
    } catch (const ParseError& e) {
        throw ParseError(f.line, f.column + e.column() - 1, e.reason());
    }
}

template <class R>
void require_monic(const Poly<R>& f) {
    if (f.degree() < 1 || !f.ring().equal(f.coeff(static_cast<std::size_t>(f.degree())), f.ring().one())) {
        throw ValidationError("polynomial must be monic of positive degree");
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

}  // namespace

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
    if (q < 2) return std::nullopt;
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, k);
}

std::string to_string(Base base) { return base == Base::Z ? "Z" : "Fq[t]"; }
std::string to_string(Mode mode) { return mode == Mode::Split ? "split" : "identity"; }

std::string describe(const ProblemSpec& spec) {
    const std::string base = spec.base == Base::Z ? "Z" : "F_" + std::to_string(spec.q) + "[t]";
    return spec.poly + " over " + base + " at " + spec.prime;
}

ProblemSpec parse_problem(std::string_view text) {
    std::map<std::string, Entry> fields;
    int lineno = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        parse_line(text.substr(start, end - start), lineno, fields);
        start = end + 1;
        ++lineno;
    }

    ProblemSpec spec;
    if (auto it = fields.find("base"); it != fields.end()) {
        if (it->second.value == "Z") {
            spec.base = Base::Z;
        } else if (it->second.value == "Fq[t]") {
            spec.base = Base::FqT;
        } else {
            throw ValidationError("base must be Z or Fq[t], got '" + it->second.value + "'");
        }
    }
    if (auto it = fields.find("q"); it != fields.end()) {
        if (spec.base != Base::FqT) throw ValidationError("q is only meaningful for base Fq[t]");
        const long q = parse_long(it->second, "q");
        if (q < 2 || q > 81 || !prime_power(static_cast<unsigned>(q))) {
            throw ValidationError("q must be a prime power at most 81, got " + it->second.value);
        }
        spec.q = static_cast<unsigned>(q);
    } else if (spec.base == Base::FqT) {
        throw ValidationError("base Fq[t] needs q");
    }
    for (const char* key : {"poly", "prime"}) {
        auto it = fields.find(key);
        if (it == fields.end()) throw ValidationError(std::string("missing key '") + key + "'");
        parse_poly_field(it->second);
        (std::string(key) == "poly" ? spec.poly : spec.prime) = it->second.value;
    }
    if (auto it = fields.find("precision"); it != fields.end()) {
        spec.precision = parse_long(it->second, "precision");
        if (spec.precision < 4) throw ValidationError("precision must be at least 4");
    }
    if (auto it = fields.find("mode"); it != fields.end()) {
        if (it->second.value == "identity") {
            spec.mode = Mode::Identity;
        } else if (it->second.value == "split") {
            spec.mode = Mode::Split;
        } else {
            throw ValidationError("mode must be identity or split, got '" + it->second.value + "'");
        }
    }
    compile(spec);
    return spec;
}

CompiledProblem compile(const ProblemSpec& spec) {
    if (spec.base == Base::Z) {
        auto f = to_integer_poly(parse_text_poly(spec.poly));
        require_monic(f);
        Integer p;
        if (spec.prime.empty() || p.set_str(spec.prime, 10) != 0) throw ValidationError("prime must be an integer");
        ResidueMap<IntegerRing> check(IntegerRing{}, p);
        equation_order(f);
        return ZProblem{std::move(f), std::move(p)};
    }
    const auto pk = prime_power(spec.q);
    if (!pk || spec.q > 81) throw ValidationError("q must be a prime power at most 81");
    const auto fq = FiniteField::get(pk->first, pk->second);
    auto f = to_fq_t_poly(parse_text_poly(spec.poly), fq);
    require_monic(f);
    auto pi = to_fq_poly_in_t(parse_text_poly(spec.prime), fq);
    ResidueMap<FqPolyRing> check(FqPolyRing(fq), pi);
    equation_order(f);
    return FqProblem{fq, std::move(f), std::move(pi)};
}

std::string render(const ProblemSpec& spec) {
    std::string out = "base=" + quote(to_string(spec.base));
    if (spec.base == Base::FqT) out += " q=" + std::to_string(spec.q);
    out += "\npoly=" + quote(spec.poly);
    out += "\nprime=" + quote(spec.prime);
    out += "\nprecision=" + std::to_string(spec.precision);
    out += "\nmode=" + quote(to_string(spec.mode)) + "\n";
    return out;
}

}  // namespace ramlab
