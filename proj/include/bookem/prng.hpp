#pragma once

#include <cstdint>
#include <vector>

namespace bookem {

// SplitMix64. Chosen over std::mt19937 so that fixtures are reproducible
// bit-for-bit from the seed on any platform or language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is < 2^-40 for the bounds used here
    // and keeps the stream platform independent.
    std::uint64_t below(std::uint64_t bound) { return bound ? next_u64() % bound : 0; }

    int range(int lo, int hi) { // inclusive
        if (hi <= lo) return lo;
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    template <class T> void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    SplitMix64 split() { return SplitMix64(next_u64() ^ 0xA0761D6478BD642FULL); }

private:
    std::uint64_t state_;
};

} // namespace bookem
