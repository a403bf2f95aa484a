#ifndef ARRMONO_PRIMEFIELD_HPP
#define ARRMONO_PRIMEFIELD_HPP

#include <cstdint>
#include <vector>

namespace arrmono {

/// Arithmetic context for F_p with p < 2^63. Elements are plain uint64_t
/// residues in [0,p); the context carries the modulus so residues stay a
/// single machine word in bulk storage (matrices).
class FpCtx {
  public:
    explicit FpCtx(uint64_t p) : p_(p) {}

    uint64_t modulus() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ || s < a ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
    }
    /// acc + a*b mod p.
    uint64_t addmul(uint64_t acc, uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b + acc) % p_);
    }
    uint64_t inv(uint64_t a) const;  // a != 0
    uint64_t pow(uint64_t a, uint64_t e) const;

  private:
    uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// `count` distinct primes with exactly `bits` bits (31 <= bits <= 62),
/// a pure function of (count, bits, seed). Every output passes
/// is_prime_u64 and is coprime to the fixed pipeline constants
/// 486, 265531392, 1620, 5, 60 (i.e. is none of 2,3,5,7), so the rational
/// constants of the construction stay invertible mod every generated prime.
std::vector<uint64_t> gen_primes(int count, int bits, uint64_t seed);

/// The primes a user-supplied modulus must avoid: divisors of the pipeline
/// constants above.
bool divides_pipeline_constants(uint64_t p);

}  // namespace arrmono

#endif
