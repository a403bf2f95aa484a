#ifndef ARRMONO_RATIONAL_HPP
#define ARRMONO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "arrmono/errors.hpp"

namespace arrmono {

// Exact coefficient arithmetic is delegated to GMP. mpq_class already
// maintains the invariants we need (lowest terms, positive denominator,
// zero canonicalized as 0/1); the helpers below add the pieces GMP does
// not ship: the textual num/den form used by the polynomial format and
// reduction into a word-sized prime field.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0; }

/// Canonical "num/den" form, denominator always written (so "5" prints as
/// "5/1"). This is the coefficient syntax of the POLY4 text format.
inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parse "num/den" or a bare integer. Canonicalizes.
Rat rat_from_string(const std::string& s);

/// Checked division (mpq division by zero is undefined behavior).
inline Rat rat_div(const Rat& a, const Rat& b) {
    if (b == 0) throw UsageError("rational division by zero");
    return a / b;
}

/// x mod p for a word-sized prime p. Requires p odd > 2 and p not dividing
/// den(x); throws BadPrime otherwise (caller selects another prime).
uint64_t reduce_mod(const Rat& x, uint64_t p);

/// Integer residue in [0,p) of a (possibly negative) mpz.
uint64_t mod_of_int(const Int& z, uint64_t p);

}  // namespace arrmono

#endif
