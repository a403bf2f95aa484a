#include "arrmono/rational.hpp"

namespace arrmono {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw IoError("malformed rational: '" + s + "'");
    q.canonicalize();
    return q;
}

uint64_t mod_of_int(const Int& z, uint64_t p) {
    mpz_class m;
    mpz_mod_ui(m.get_mpz_t(), z.get_mpz_t(), p);  // mpz_mod_ui is nonnegative
    return mpz_get_ui(m.get_mpz_t());
}

uint64_t reduce_mod(const Rat& x, uint64_t p) {
    uint64_t den = mod_of_int(x.get_den(), p);
    if (den == 0)
        throw BadPrime("denominator " + x.get_den().get_str() + " vanishes mod " +
                       std::to_string(p));
    uint64_t num = mod_of_int(x.get_num(), p);
    if (num == 0) return 0;
    if (den == 1) return num;
    // inverse of den by extended Euclid; p prime and den != 0 mod p
    int64_t t = 0, newt = 1;
    uint64_t r = p, newr = den;
    while (newr != 0) {
        uint64_t q = r / newr;
        int64_t tt = t - static_cast<int64_t>(q) * newt;
        t = newt;
        newt = tt;
        uint64_t rr = r - q * newr;
        r = newr;
        newr = rr;
    }
    uint64_t inv = t >= 0 ? static_cast<uint64_t>(t) : p - static_cast<uint64_t>(-t);
    return static_cast<uint64_t>((static_cast<__uint128_t>(num) * inv) % p);
}

}  // namespace arrmono
