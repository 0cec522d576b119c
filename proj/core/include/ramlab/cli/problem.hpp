#pragma once

#include <optional>
#include <string>
#include <utility>
#include <string_view>
#include <variant>

#include "ramlab/arith/polyalg.hpp"
#include "ramlab/config.hpp"

namespace ramlab {

enum class Base { Z, FqT };
enum class Mode { Split, Identity };

/// One problem file. Text format: `key=value` pairs separated by blanks, any
/// number per line; values are bare tokens or double-quoted strings with
/// `\"` and `\\` escapes; `#` starts a comment line.
///
///     base="Fq[t]" q=9
///     poly="x^2 - a*t"
///     prime="t^2 + 1"
///
/// Keys: base (Z | Fq[t]), q (Fq[t] only), poly, prime, precision, mode
/// (identity | split).
struct ProblemSpec {
    Base base = Base::Z;
    unsigned q = 0;
    std::string poly;
    std::string prime;
    long precision = kDefaultPrecision;
    Mode mode = Mode::Identity;

    bool operator==(const ProblemSpec&) const = default;
};

struct ZProblem {
    Poly<IntegerRing> f;
    Integer p;
};

struct FqProblem {
    FiniteField fq;
    Poly<FqPolyRing> f;
    GfPoly pi;
};

using CompiledProblem = std::variant<ZProblem, FqProblem>;

/// ParseError (1-based line and column) for malformed text, unknown or
/// repeated keys; ValidationError when the problem itself is unusable.
ProblemSpec parse_problem(std::string_view text);

/// Canonical text; parse_problem(render(s)) == s.
std::string render(const ProblemSpec& spec);

/// Builds the polynomial and prime. ValidationError for non-monic f, a
/// non-prime p, or pi not monic irreducible.
CompiledProblem compile(const ProblemSpec& spec);

/// (p, k) with q = p^k, if q is a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

std::string to_string(Base base);
std::string to_string(Mode mode);
/// "x^2+1 over Z at 5", "x^3-t over F_3[t] at t".
std::string describe(const ProblemSpec& spec);

}  // namespace ramlab
