#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "formcode/error.hpp"

namespace formcode {

/// Binomial coefficient in 64 bits; throws on overflow.
inline uint64_t binom_u64(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int64_t j = 1; j <= k; ++j) {
        // r * (n - k + j) always divisible by j at this point
        uint64_t term = static_cast<uint64_t>(n - k + j);
        if (r > UINT64_MAX / term)
            throw Error(errs::out_of_range, "binomial coefficient overflows 64 bits");
        r = r * term / static_cast<uint64_t>(j);
    }
    return r;
}

/// Three-decimal fixed formatting, round half away from zero.
inline std::string format3(double x) {
    long long milli = std::llround(x * 1000.0);
    bool neg = milli < 0;
    unsigned long long a = neg ? -static_cast<unsigned long long>(milli) : milli;
    std::string s = std::to_string(a / 1000) + '.';
    std::string frac = std::to_string(a % 1000);
    s += std::string(3 - frac.size(), '0') + frac;
    return neg ? "-" + s : s;
}

/// Exact variant for nonnegative rationals num/den (ties resolved away from zero).
inline std::string format3_ratio(uint64_t num, uint64_t den) {
    uint64_t milli = (2000 * num + den) / (2 * den);
    std::string s = std::to_string(milli / 1000) + '.';
    std::string frac = std::to_string(milli % 1000);
    s += std::string(3 - frac.size(), '0') + frac;
    return s;
}

/// splitmix64 output function.
inline uint64_t splitmix64_mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Seeded splitmix64 stream.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    /// Unbiased uniform draw in [0, bound), bound >= 1.
    uint64_t below(uint64_t bound) {
        // Lemire multiply-shift with rejection on the short range
        while (true) {
            uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            uint64_t lo = static_cast<uint64_t>(m);
            if (lo >= bound || lo >= (0 - bound) % bound) return static_cast<uint64_t>(m >> 64);
        }
    }

private:
    uint64_t state_;
};

}  // namespace formcode
