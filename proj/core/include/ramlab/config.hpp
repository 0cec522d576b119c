#pragma once

#include <cstdint>

namespace ramlab {

inline constexpr long kDefaultPrecision = 64;
inline constexpr long kDefaultMaxPrecision = 512;
inline constexpr std::uint64_t kDefaultSeed = 0;

/// Upper bound for the precision-doubling policy. Reads RAMLAB_MAX_PRECISION
/// on every call; malformed or non-positive values fall back to the default.
long max_precision();

/// Process-wide seed for randomized splitting; results are canonical for
/// every seed, only the route taken differs.
std::uint64_t default_seed() noexcept;
void set_default_seed(std::uint64_t seed) noexcept;

}  // namespace ramlab
