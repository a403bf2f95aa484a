#ifndef ARRMONO_RNG_HPP
#define ARRMONO_RNG_HPP

#include <cstdint>

namespace arrmono {

/// splitmix64: tiny deterministic generator used wherever reproducible
/// pseudo-randomness is needed (prime search, random slices, test data).
/// Not a std engine on purpose: the output stream is frozen across
/// platforms and standard-library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0. Modulo bias is irrelevant for our
    /// uses (coefficients, candidate draws), determinism is what matters.
    uint64_t below(uint64_t bound) { return next() % bound; }

    /// Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

  private:
    uint64_t state_;
};

}  // namespace arrmono

#endif
