#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrmono/errors.hpp"
#include "arrmono/primefield.hpp"
#include "arrmono/rational.hpp"
#include "arrmono/rng.hpp"

using namespace arrmono;

TEST_CASE("rational arithmetic stays exact and canonical") {
    Rat a(1, 6), b(1, 4);
    CHECK(a + b == Rat(5, 12));
    CHECK(Rat(-486) * Rat(1) == Rat(-486));
    CHECK(Rat(1, 265531392) * Rat(265531392) == 1);
    Rat c(6, 4);
    c.canonicalize();
    CHECK(c.get_num() == 3);
    CHECK(c.get_den() == 2);
    CHECK(rat_div(Rat(1, 6), Rat(1, 4)) == Rat(2, 3));
    CHECK_THROWS_AS(rat_div(Rat(1), Rat(0)), UsageError);
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(-486)) == "-486/1");
    CHECK(rat_from_string("5/12") == Rat(5, 12));
    CHECK(rat_from_string("-3/9") == Rat(-1, 3));  // canonicalized on parse
    CHECK(rat_to_string(rat_from_string("0/7")) == "0/1");
}

TEST_CASE("reduce_mod basics") {
    CHECK(reduce_mod(Rat(1, 6), 7) == 6);  // 6*6 = 36 = 1 mod 7
    uint64_t p = gen_primes(1, 31, 3)[0];
    CHECK(reduce_mod(Rat(-486), p) == p - 486 % p);
    CHECK_THROWS_AS(reduce_mod(Rat(1, 2), 2), BadPrime);
}

TEST_CASE("reduce_mod is a ring homomorphism") {
    SplitMix64 rng(42);
    uint64_t p = gen_primes(1, 62, 1)[0];
    FpCtx F(p);
    for (int i = 0; i < 20; ++i) {
        Rat a(static_cast<long>(rng.range(-1000, 1000)), static_cast<long>(rng.range(1, 97)));
        Rat b(static_cast<long>(rng.range(-1000, 1000)), static_cast<long>(rng.range(1, 97)));
        a.canonicalize();
        b.canonicalize();
        CHECK(reduce_mod(a * b, p) == F.mul(reduce_mod(a, p), reduce_mod(b, p)));
        CHECK(reduce_mod(a + b, p) == F.add(reduce_mod(a, p), reduce_mod(b, p)));
    }
}

TEST_CASE("prime field ops") {
    uint64_t p = (1ULL << 61) - 1;  // Mersenne prime
    REQUIRE(is_prime_u64(p));
    FpCtx F(p);
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        uint64_t a = rng.next() % p;
        if (a == 0) a = 1;
        CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK(F.pow(2, 61) == 1);  // 2^61 = p + 1
}

TEST_CASE("is_prime_u64 matches small sieve") {
    auto slow = [](uint64_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (uint64_t n = 0; n < 2000; ++n) CHECK(is_prime_u64(n) == slow(n));
    CHECK(is_prime_u64(4611686018427387847ULL));  // 62-bit prime
    CHECK_FALSE(is_prime_u64(4611686018427387847ULL * 3));
}

TEST_CASE("gen_primes is deterministic and well-formed") {
    auto p1 = gen_primes(2, 62, 0);
    auto p2 = gen_primes(2, 62, 0);
    CHECK(p1 == p2);
    CHECK(p1.size() == 2);
    CHECK(p1[0] != p1[1]);
    for (uint64_t p : p1) {
        CHECK(is_prime_u64(p));
        CHECK(p >= (1ULL << 61));
        CHECK(p < (1ULL << 62));
        CHECK_FALSE(divides_pipeline_constants(p));
        CHECK(265531392 % p != 0);
    }
    auto q = gen_primes(1, 31, 7);
    CHECK(q.size() == 1);
    CHECK(q[0] >= (1ULL << 30));
    CHECK(q[0] < (1ULL << 31));
    CHECK(gen_primes(4, 62, 5) != gen_primes(4, 62, 6));
}

TEST_CASE("pipeline constant guard") {
    CHECK(divides_pipeline_constants(2));
    CHECK(divides_pipeline_constants(3));
    CHECK(divides_pipeline_constants(5));
    CHECK(divides_pipeline_constants(7));
    CHECK_FALSE(divides_pipeline_constants(11));
}
