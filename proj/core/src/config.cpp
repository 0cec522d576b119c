#include "ramlab/config.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ramlab {

long max_precision() {
    const char* env = std::getenv("RAMLAB_MAX_PRECISION");
    if (env == nullptr) return kDefaultMaxPrecision;
    long value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value <= 0) return kDefaultMaxPrecision;
    return value;
}

namespace {
std::atomic<std::uint64_t> g_seed{kDefaultSeed};
}

std::uint64_t default_seed() noexcept { return g_seed.load(std::memory_order_relaxed); }

void set_default_seed(std::uint64_t seed) noexcept { g_seed.store(seed, std::memory_order_relaxed); }

}  // namespace ramlab
