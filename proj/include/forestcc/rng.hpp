#ifndef FORESTCC_RNG_HPP
#define FORESTCC_RNG_HPP

#include <cstdint>
#include <random>

namespace forestcc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Reproducible random stream: the state is fully determined by
/// (seed, stream index), and distinct indices give statistically
/// independent sequences. Sample i of a Monte Carlo run uses stream i,
/// which makes results independent of how samples are split over threads.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(bound)) % bound;
    }

    /// Rademacher +1/-1.
    double sign() { return (gen_() & 1u) ? 1.0 : -1.0; }

private:
    std::mt19937_64 gen_;
};

} // namespace forestcc

#endif
