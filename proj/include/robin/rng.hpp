#ifndef ROBIN_RNG_HPP_
#define ROBIN_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace robin {

/// Seed for every randomized operation. Identical seed + identical inputs
/// gives bit-identical outputs across runs and thread counts.
struct RngSeed {
    std::uint64_t value = 0;
};

namespace rng_detail {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace rng_detail

/// Derives an independent child seed from a base seed and a path of indices
/// (e.g. {domain, level_index, replicate_index}). Parallel workers that derive
/// their streams this way produce results independent of scheduling.
inline RngSeed derive_seed(RngSeed base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = rng_detail::mix(base.value);
    for (std::uint64_t component : path) {
        s = rng_detail::mix(s ^ rng_detail::mix(component));
    }
    return RngSeed{s};
}

/// Deterministic random stream. Wraps mt19937_64 but implements its own
/// bounded draws and shuffling so results do not depend on the standard
/// library's distribution internals.
class Rng {
public:
    explicit Rng(RngSeed seed) : gen_(seed.value) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t index(std::size_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t draw;
        do {
            draw = gen_();
        } while (draw >= limit);
        return static_cast<std::size_t>(draw % n);
    }

    bool flip() { return (gen_() >> 63) != 0; }

    /// Uniform double in [0, 1).
    double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[index(i)]);
        }
    }

    /// Identity permutation of size n, shuffled.
    std::vector<int> permutation(int n) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        shuffle(order);
        return order;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace robin

#endif  // ROBIN_RNG_HPP_
