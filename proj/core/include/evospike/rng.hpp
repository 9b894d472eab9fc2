#pragma once

#include <cmath>
#include <cstdint>

namespace evospike {

// xoshiro256++ with splitmix64 seeding. Self-contained so that streams are
// reproducible independent of the standard library's distribution
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 1) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    /// Stream for (run seed, generation, slot index): parallel and serial
    /// execution draw identical values regardless of scheduling.
    static Rng stream(std::uint64_t run_seed, std::uint64_t generation, std::uint64_t index) {
        std::uint64_t x = run_seed;
        std::uint64_t a = splitmix64(x) ^ (generation * 0x9e3779b97f4a7c15ull);
        std::uint64_t b = splitmix64(a) ^ (index * 0xbf58476d1ce4e5b9ull);
        return Rng(splitmix64(b));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    bool chance(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller (pairs not cached).
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace evospike
