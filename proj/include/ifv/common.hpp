#ifndef IFV_COMMON_HPP
#define IFV_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ifv {

// Caller error: malformed input, mismatched domains, violated precondition.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds a configured or physical limit.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A fact the theory guarantees failed to hold; indicates a bug (or a
// falsified theorem, which would be news).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// n! with overflow detection.
std::uint64_t factorial_checked(int n);

// (2n-1)!! = 1*3*...*(2n-1), the number of perfect matchings of K_{2n};
// double_factorial_checked(0) = 1 (empty product, covers the (-1)!! convention).
std::uint64_t double_factorial_checked(int n);

std::uint64_t binomial(int n, int k);

// Deterministic RNG for seeded property suites: splitmix64, fully specified
// by this code. Bits are drawn from the raw stream instead of std
// distributions, which are not portable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform in [0, bound), bound >= 1
    std::uint64_t below(std::uint64_t bound);
    int bit() { return static_cast<int>(next() & 1u); }

private:
    std::uint64_t state_;
};

}  // namespace ifv

#endif
