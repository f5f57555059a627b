#include "ifv/common.hpp"

#include <limits>

namespace ifv {

std::uint64_t factorial_checked(int n) {
    if (n < 0) throw UsageError("factorial of negative argument");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i))
            throw CapacityError("factorial(" + std::to_string(n) + ") overflows 64 bits");
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t double_factorial_checked(int n) {
    if (n < 0) throw UsageError("double factorial of negative count");
    std::uint64_t r = 1;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t f = 2u * static_cast<std::uint64_t>(i) - 1u;
        if (r > std::numeric_limits<std::uint64_t>::max() / f)
            throw CapacityError("double factorial overflows 64 bits");
        r *= f;
    }
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// splitmix64; used only to scramble the seed before feeding the main stream.
static std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next() { return splitmix(state_); }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("Rng::below requires a positive bound");
    // rejection sampling keeps the draw unbiased and deterministic
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

}  // namespace ifv
