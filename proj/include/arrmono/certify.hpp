#ifndef ARRMONO_CERTIFY_HPP
#define ARRMONO_CERTIFY_HPP

#include <optional>

#include "arrmono/certificate.hpp"
#include "arrmono/gradedmap.hpp"
#include "arrmono/rank.hpp"

namespace arrmono {

/// Rational reconstruction of r mod m with |num|, den <= sqrt(m/2);
/// returns nullopt when no admissible fraction exists.
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus);

/// Chinese remainder combination into [0, m1*m2).
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

/// Certifies "the kernel of M over Q is trivial". Proved when the mod-p
/// rank equals the column count for at least one supplied prime (one-sided:
/// full rank mod p implies full rank over Q). When every prime is
/// deficient the verdict is Inconclusive, except that small systems fall
/// back to exact rational elimination, which decides the claim both ways.
Certificate kernel_trivial_certificate(const GradedMap& M, const std::vector<uint64_t>& primes,
                                       int threads = 1);

struct MinSyzygyResult {
    Certificate cert;
    int first_degree = -1;                    // smallest D with a nonzero kernel, -1 if none found
    std::array<int, 3> multidegree{-1, -1, -1};
    std::vector<Polynomial> witness;          // exact rational syzygy (r1,r2,r3), verified
};

/// Scans total degrees D <= d_max of the multiplication map of (g1,g2,g3).
/// Degrees where at most one block is nonempty are trivially syzygy-free
/// (S is a domain); other degrees are certified kernel-free mod the given
/// primes. At the first degree with a nonzero mod-p kernel, a kernel
/// vector is lifted (CRT over the primes + rational reconstruction) and
/// re-verified exactly over Q, so the reported syzygy existence never
/// rests on modular evidence alone.
MinSyzygyResult min_syzygy_scan(const std::vector<Polynomial>& gens, int d_max,
                                const std::vector<uint64_t>& primes, int threads = 1);

/// Certifies that (g1,g2,g3) is a regular sequence: cuts with a seeded
/// random linear form, eliminates one variable, and shows the restricted
/// ideal contains the entire graded piece of degree
/// D0 = d1+d2+d3-2 (one past the socle degree of the would-be complete
/// intersection). Surjectivity mod p implies surjectivity over Q, hence
/// the slice is Artinian and the sequence is regular. Retries with fresh
/// slices; a common monomial factor refutes outright.
Certificate regular_sequence_certificate(const std::vector<Polynomial>& gens, uint64_t seed,
                                         const std::vector<uint64_t>& primes, int threads = 1,
                                         int max_retries = 4);

}  // namespace arrmono

#endif
