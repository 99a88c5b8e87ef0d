#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace camiq {

/// Seeded, portable pseudo-random source.
///
/// The generator is the standard 32-bit Mersenne Twister (mt19937), whose
/// output stream is fully specified by the C++ standard. Derived draws are
/// built from raw 32-bit words with fixed recipes so that any implementation
/// of MT19937 reproduces the same sequence:
///   - uniform(): (a * 2^26 + b) / 2^53 with a = word >> 5, b = word >> 6
///     (two words per call, the classic 53-bit resolution recipe),
///   - bounded(n): rejection sampling on raw words, then modulo n.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        const std::uint32_t a = next_word() >> 5;   // 27 bits
        const std::uint32_t b = next_word() >> 6;   // 26 bits
        return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) *
               (1.0 / 9007199254740992.0);
    }

    /// Uniform integer in [0, n). Unbiased via rejection.
    int bounded(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::bounded: n must be positive");
        const std::uint32_t limit = static_cast<std::uint32_t>(n);
        const std::uint32_t remainder =
            static_cast<std::uint32_t>(0x100000000ULL % limit);
        std::uint32_t x = next_word();
        if (remainder != 0) {
            // Reject the top partial block; for divisors of 2^32 every word fits.
            const std::uint32_t threshold =
                static_cast<std::uint32_t>(0x100000000ULL - remainder);
            while (x >= threshold) x = next_word();
        }
        return static_cast<int>(x % limit);
    }

    /// Number of raw 32-bit words consumed so far (stream position).
    std::uint64_t words_consumed() const { return words_; }

private:
    std::uint32_t next_word() {
        ++words_;
        return gen_();
    }

    std::mt19937 gen_;
    std::uint64_t words_ = 0;
};

}  // namespace camiq
