#include "arrmono/primefield.hpp"

#include <set>
#include <stdexcept>

#include "arrmono/rng.hpp"

namespace arrmono {

uint64_t FpCtx::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    uint64_t base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint64_t FpCtx::inv(uint64_t a) const {
    int64_t t = 0, newt = 1;
    uint64_t r = p_, newr = a;
    while (newr != 0) {
        uint64_t q = r / newr;
        int64_t tt = t - static_cast<int64_t>(q) * newt;
        t = newt;
        newt = tt;
        uint64_t rr = r - q * newr;
        r = newr;
        newr = rr;
    }
    return t >= 0 ? static_cast<uint64_t>(t) : p_ - static_cast<uint64_t>(-t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    FpCtx F(n);
    // base set proven complete for n < 3.3e24, covers all uint64_t
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = F.pow(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = F.mul(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool divides_pipeline_constants(uint64_t p) {
    // 486 = 2*3^5, 265531392 = 2^12*3^3*7^4, 1620 = 2^2*3^4*5
    for (uint64_t c : {486ULL, 265531392ULL, 1620ULL, 5ULL, 60ULL})
        if (c % p == 0) return true;
    return false;
}

std::vector<uint64_t> gen_primes(int count, int bits, uint64_t seed) {
    if (count <= 0) throw std::invalid_argument("gen_primes: count must be positive");
    if (bits < 31 || bits > 62) throw std::invalid_argument("gen_primes: bits must be in [31,62]");
    SplitMix64 rng(seed ^ (static_cast<uint64_t>(bits) << 8) ^ static_cast<uint64_t>(count));
    std::set<uint64_t> seen;
    std::vector<uint64_t> out;
    const uint64_t top = 1ULL << (bits - 1);
    while (static_cast<int>(out.size()) < count) {
        uint64_t cand = top | (rng.next() & (top - 1)) | 1ULL;  // exactly `bits` bits, odd
        if (!is_prime_u64(cand)) continue;
        if (divides_pipeline_constants(cand)) continue;  // impossible for bits >= 31, kept as a guard
        if (!seen.insert(cand).second) continue;
        out.push_back(cand);
    }
    return out;
}

}  // namespace arrmono
