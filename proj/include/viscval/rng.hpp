#pragma once

#include <cmath>
#include <cstdint>

namespace viscval {

/** Counter-based deterministic RNG (splitmix64 core).
 *
 * Every randomized operation in the library derives one stream per logical
 * sample via fork(seed, stream), so results are bit-identical for a given
 * (seed, inputs) regardless of call order or parallelism. We avoid
 * <random> distributions on purpose: their sequences are
 * implementation-defined, which would break cross-compiler reproducibility
 * of committed fixtures.
 */
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    /** Independent stream for logical sample index `stream` under `seed`. */
    static Rng fork(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t h = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
        h = mix(h);
        h = mix(h ^ seed);
        return Rng(h);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /** Uniform double in [0, 1). */
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /** Uniform integer in [0, n). */
    std::uint64_t uniform_int(std::uint64_t n) {
        // 128-bit multiply-shift; bias < 2^-64, irrelevant at our sample counts.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /** Standard normal via Box-Muller (pairs are cached per stream). */
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        // Guard the log; uniform() can return exactly 0.
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30u)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27u)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31u);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace viscval
