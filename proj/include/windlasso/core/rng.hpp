#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace windlasso {

/// splitmix64 step; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Deterministic random source.
 *
 * Wraps mt19937_64 but generates all variates itself, so a given seed
 * produces the same stream on every standard library. Reports written from
 * seeded runs are expected to be byte-identical across reruns, which rules
 * out std::uniform_int_distribution and friends (their algorithms are
 * implementation-defined).
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_base_(seed) {}

    /// Child generator with an independent stream, stable in (seed, index).
    Rng child(std::uint64_t index) const {
        return Rng(mix_seed(seed_base_ ^ mix_seed(index + 1)));
    }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % n;
    }

    /// Standard normal via the Marsaglia polar method (no libm trig).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        has_spare_ = true;
        return u * factor;
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// k distinct indices from [0, n), in draw order (partial Fisher-Yates).
    std::vector<std::int64_t> sample_without_replacement(std::int64_t n, std::int64_t k) {
        std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), std::int64_t{0});
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(k));
        for (std::int64_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::int64_t>(uniform_int(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            out.push_back(pool[static_cast<std::size_t>(i)]);
        }
        return out;
    }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_base_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace windlasso
