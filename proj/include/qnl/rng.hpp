// Counter-based seeded RNG. Every stochastic result in the toolkit carries
// (seed, algorithm id) so it can be replayed bit-exactly; derived streams give
// schedule-independent parallelism.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace qnl {

class SeededRng {
  public:
    static constexpr const char* kAlgorithm = "splitmix64-ctr-v1";

    explicit SeededRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Box-Muller pair of independent standard normals.
    std::pair<double, double> next_gaussian_pair() {
        double u1 = 1.0 - next_double(); // (0, 1]
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    double next_gaussian() { return next_gaussian_pair().first; }

    // Independent stream keyed by `salt`; used to hand each restart / grid
    // point / Monte Carlo sample its own generator so results do not depend
    // on evaluation order.
    SeededRng derive(std::uint64_t salt) const {
        std::uint64_t z = seed_ ^ (salt + 0x9E3779B97F4A7C15ull + (seed_ << 6) + (seed_ >> 2));
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return SeededRng(z ^ (z >> 31));
    }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace qnl
