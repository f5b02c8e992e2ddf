#pragma once

#include <cstdint>
#include <string_view>

namespace cremona {

// SplitMix64.  Used instead of <random> engines so that seeded runs are
// bit-reproducible across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; rejection-free modulo is fine at our scale
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return next() & 1; }

  private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Per-claim stream derivation from one global seed.
inline Rng derive_rng(std::uint64_t global_seed, std::string_view tag) {
    return Rng(global_seed ^ fnv1a(tag));
}

} // namespace cremona
