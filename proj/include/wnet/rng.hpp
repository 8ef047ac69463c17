#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace wnet {

// SplitMix64 finalizer, used to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seedable random stream with cheap derived substreams.
//
// All variates are produced by explicit transforms of mt19937_64 output
// (never std::*_distribution, whose algorithms are implementation-defined),
// so a given (seed, call sequence) yields the same values on every
// conforming toolchain.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed)
        : seed_(seed), engine_(mix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Independent stream identified by (seed, key); key reuse gives the
    // same substream.
    RandomStream substream(std::uint64_t key) const {
        return RandomStream(mix64(seed_ ^ mix64(key)));
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0,n), unbiased (rejection sampling). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller; one spare value is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double lognormal(double mu, double sigma) {
        return std::exp(normal(mu, sigma));
    }

    // Fisher-Yates permutation of {0,...,n-1}.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

  private:
    static constexpr double kPi = 3.14159265358979323846;

    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wnet
