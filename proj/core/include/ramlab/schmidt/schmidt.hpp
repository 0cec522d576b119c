#pragma once

#include <string>
#include <vector>

#include "ramlab/arith/polyalg.hpp"
#include "ramlab/localfield/local_poly.hpp"

namespace ramlab {

inline constexpr const char* kTranscendenceCaveat = "finite-precision model; transcendence of c assumed";

/// Finite-precision model of the extension K(x)/(x^p - s) of K = F_p(t, s),
/// with s sent to c^p in F_p((t)) for the gap series c = 1 + sum_k t^(k!).
struct SchmidtModel {
    unsigned p;
    long precision;
    CompletionContext ctx;
    /// c truncated to exponents <= precision.
    GfPoly c;
    /// c^p, exactly.
    GfPoly s;
    std::vector<std::string> caveats;
};

/// p in {2, 3, 5, 7} and precision >= 6p, else PrecisionTooSmall
/// (ValidationError for an unsupported p).
SchmidtModel build_model(unsigned p, long precision);

struct TensorSplit {
    long rhs_dim;
    long radical_dim;
    /// (x - c)^p == x^p - s at the model precision.
    bool verified;
    std::string factorization;
};

TensorSplit tensor_split(const SchmidtModel& model);

struct ResidueWitness {
    long m;
    /// c truncated to degree m.
    GfPoly y;
    /// Lower bound for w(u - y), read off from v(s - y^p) / p. Exact unless
    /// s - y^p vanishes to the precision c^p is known at.
    long w_lower;
    bool exact;
    bool holds() const { return w_lower >= m; }
};

/// 0 <= m <= precision, else ValidationError.
ResidueWitness residue_witness(const SchmidtModel& model, long m);

struct SchmidtReport {
    unsigned p;
    long precision;
    long degree;
    long lhs;
    long rhs;
    long radical_dim;
    bool classical;
    bool eq11;
    bool inequality;
    /// Largest M such that the witness chain holds for all m <= M.
    long witnessed_to;
    std::vector<std::string> caveats;

    /// One-line "lhs < n; lhs = rhs OK".
    std::string summary() const;
    std::string to_text() const;
};

SchmidtReport strict_inequality_report(const SchmidtModel& model);

}  // namespace ramlab
