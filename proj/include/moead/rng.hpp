#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace moead {

// mt19937_64 with hand-rolled draw helpers so the stream does not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n), rejection sampled so every value is equally likely
    std::size_t index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        std::uint64_t r = gen_();
        while (r >= limit) r = gen_();
        return static_cast<std::size_t>(r % bound);
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// Seed for run r of a batch: base seed XOR the 0-based run index.
inline std::uint64_t run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    return base_seed ^ run_index;
}

}  // namespace moead
