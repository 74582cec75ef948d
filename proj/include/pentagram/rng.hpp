#pragma once

#include <cstdint>
#include <random>

namespace pentagram {

// Seeded generator with a fully specified stream (mt19937_64 plus an explicit
// bits-to-double map), so sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 eng_;
};

} // namespace pentagram
