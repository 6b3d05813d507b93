#ifndef GRAPHLAB_RNG_HPP
#define GRAPHLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace graphlab {

// Reproducibility contract: identical (master, stream) yields bit-identical
// draws on every platform.  mt19937_64 is fully specified by the standard;
// the sampling helpers below avoid std::uniform_*_distribution, whose
// algorithms are implementation-defined.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    Seed with_stream(std::uint64_t s) const { return {master, s}; }
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

class Rng {
public:
    explicit Rng(Seed seed)
        : engine_(detail::splitmix64(detail::splitmix64(seed.master) ^
                                     (seed.stream + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound) via rejection sampling; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace graphlab

#endif
