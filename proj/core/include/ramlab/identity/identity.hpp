#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ramlab/globalorder/order.hpp"

namespace ramlab {

inline constexpr const char* kIrreducibilityCaveat = "irreducibility assumed";

struct IdentityReport {
    long degree = 0;
    long lhs = 0;
    long rhs = 0;
    long radical_dim = 0;
    std::vector<RamifiedPrime> primes;
    bool eq11 = false;
    bool classical = false;
    bool inequality = false;
    bool e5_c = false;
    bool e5_d = false;
    bool semisimple = false;
    bool certified = false;
    /// Precision at which the right side certified.
    long precision_used = 0;
    /// Basis of the p-maximal order, rendered.
    std::vector<std::string> order_basis;
    std::vector<std::string> caveats;

    bool all_verdicts() const { return eq11 && classical && inequality && e5_c && e5_d; }
};

struct RhsResult {
    long dim;
    bool certified;
    long precision;
};

/// Sum of e*f over the primes above p, with the primes.
template <class R>
std::pair<long, std::vector<RamifiedPrime>> lhs_sum(const Poly<R>& f, const typename R::Elem& p);

/// Radical degree of f over the completion at p, by the doubling policy
/// started past the discriminant valuation of f.
template <class R>
RhsResult rhs_dim(const Poly<R>& f, const typename R::Elem& p, long precision);

/// Necessary-condition irreducibility screen; true means f is proven
/// irreducible over the fraction field of the base.
template <class R>
bool irreducibility_witnessed(const Poly<R>& f);

template <class R>
IdentityReport check_identity(const Poly<R>& f, const typename R::Elem& p, long precision);

}  // namespace ramlab
