#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "arrmono/errors.hpp"
#include "arrmono/polynomial.hpp"
#include "oracle_helpers.hpp"

using namespace arrmono;
using namespace testing_oracles;

namespace {
Polynomial var(int v) { return Polynomial::variable(v); }
const Polynomial X = var(0), Y = var(1), Z = var(2), T = var(3);

Polynomial pow(const Polynomial& p, int e) {
    Polynomial r = Polynomial::constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}
}  // namespace

TEST_CASE("mono_basis sizes match graded dimensions") {
    CHECK(mono_basis(2).size() == 10);
    CHECK(mono_basis(18).size() == 1330);
    CHECK(mono_basis(47).size() == 19600);
    CHECK(mono_count(8) == 165);
    CHECK(mono_count(54, 3) == 1540);
    CHECK(mono_count(-3) == 0);
}

TEST_CASE("mono_basis is strictly descending grlex and rank inverts it") {
    for (int d : {0, 1, 2, 5, 9}) {
        for (int nv : {3, 4}) {
            auto basis = mono_basis(d, nv);
            CHECK(static_cast<int64_t>(basis.size()) == mono_count(d, nv));
            for (size_t i = 0; i < basis.size(); ++i) {
                if (i > 0) CHECK(basis[i] < basis[i - 1]);
                CHECK(mono_rank(basis[i], nv) == static_cast<int64_t>(i));
            }
        }
    }
    CHECK(mono_basis(3)[0] == Mono(3, 0, 0, 0));  // leading monomial is x^d
}

TEST_CASE("basic products") {
    CHECK((X + Y) * (X - Y) == pow(X, 2) - pow(Y, 2));
    Polynomial q1 = pow(X, 4) - pow(Y, 4);
    Polynomial q2 = pow(X, 4) + pow(Y, 4);
    CHECK(q1 * q2 == pow(X, 8) - pow(Y, 8));
    CHECK((q1 * q2).homogeneous_of_degree(8));
}

TEST_CASE("homogeneity flag propagates through mul") {
    SplitMix64 rng(11);
    Polynomial a = random_homogeneous(rng, 5, 8);
    Polynomial b = random_homogeneous(rng, 3, 6);
    CHECK((a * b).homogeneous_of_degree(8));
    Polynomial mixed = a + Polynomial::constant(Rat(1));
    CHECK_FALSE(mixed.homogeneous());
}

TEST_CASE("mul agrees with the naive term-by-term oracle") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial a = random_homogeneous(rng, 1 + static_cast<int>(rng.below(8)), 10);
        Polynomial b = random_homogeneous(rng, 1 + static_cast<int>(rng.below(8)), 10);
        CHECK(naive_equal(naive_mul(to_naive(a), to_naive(b)), a * b));
    }
}

TEST_CASE("mul with rational coefficients clears denominators correctly") {
    Polynomial a = X.scaled(Rat(1, 6)) + Y.scaled(Rat(3, 4));
    Polynomial b = X.scaled(Rat(2, 3)) - Y.scaled(Rat(5, 7));
    CHECK(naive_equal(naive_mul(to_naive(a), to_naive(b)), a * b));
    CHECK_FALSE((a * b).integer_coeffs());
    CHECK((X + Y).integer_coeffs());
}

TEST_CASE("mul agrees with evaluation at seeded random points") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial a = random_homogeneous(rng, 1 + static_cast<int>(rng.below(8)), 12);
        Polynomial b = random_homogeneous(rng, 1 + static_cast<int>(rng.below(8)), 12);
        Polynomial ab = a * b;
        for (int pt = 0; pt < 5; ++pt) {
            std::array<Rat, 4> point{random_rational(rng), random_rational(rng),
                                     random_rational(rng), random_rational(rng)};
            CHECK(ab.eval(point) == a.eval(point) * b.eval(point));
        }
    }
}

TEST_CASE("diff") {
    CHECK((pow(X, 4) - pow(Y, 4)).diff(0) == pow(X, 3).scaled(Rat(4)));
    CHECK(Polynomial::constant(Rat(5)).diff(3).is_zero());
    SplitMix64 rng(5);
    Polynomial p = random_homogeneous(rng, 7, 15);
    CHECK(p.diff(2).homogeneous_of_degree(6));
    // mixed partials commute
    CHECK(p.diff(0).diff(1) == p.diff(1).diff(0));
}

TEST_CASE("exact_div") {
    CHECK((pow(X, 2) - pow(Y, 2)).exact_div(X - Y) == X + Y);
    CHECK_THROWS_AS((pow(X, 2) + pow(Y, 2)).exact_div(X + Y), NotDivisible);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = random_homogeneous(rng, 4, 6);
        Polynomial b = random_homogeneous(rng, 3, 5);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
    }
    CHECK_THROWS(X.exact_div(Polynomial()));
}

TEST_CASE("eval basics") {
    Polynomial p = X * Y + Z.scaled(Rat(1, 2));
    CHECK(p.eval({Rat(2), Rat(3), Rat(4), Rat(0)}) == Rat(8));
}

TEST_CASE("substitute_linear eliminates a variable") {
    // t := x + 2y under the slice; (t^2) -> (x+2y)^2
    Polynomial p = pow(T, 2);
    Polynomial s = p.substitute_linear(3, {Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(s == pow(X + Y.scaled(Rat(2)), 2));
    for (const auto& t : s.terms()) CHECK(t.m.e(3) == 0);
}

TEST_CASE("permute_vars") {
    Polynomial p = pow(X, 2) * T;
    std::array<int, 4> perm{1, 0, 2, 3};  // swap x and y
    CHECK(p.permute_vars(perm) == pow(Y, 2) * T);
}

TEST_CASE("POLY4 round trip is bit-exact") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_homogeneous(rng, 1 + static_cast<int>(rng.below(20)), 25)
                           .scaled(Rat(1, 1 + static_cast<long>(rng.below(11))));
        std::string text = p.to_poly4();
        Polynomial q = Polynomial::from_poly4(text);
        CHECK(p == q);
        CHECK(q.to_poly4() == text);
    }
    Polynomial zero;
    CHECK(Polynomial::from_poly4(zero.to_poly4()).is_zero());
}

TEST_CASE("POLY4 rejects malformed input") {
    CHECK_THROWS_AS(Polynomial::from_poly4("POLY5 v1 degree=0 terms=0\n"), IoError);
    CHECK_THROWS_AS(Polynomial::from_poly4("POLY4 v1 degree=1 terms=1\n"), IoError);
    // out-of-order terms are refused (canonical order is part of the format)
    CHECK_THROWS_AS(
        Polynomial::from_poly4("POLY4 v1 degree=1 terms=2\n1/1 0 1 0 0\n1/1 1 0 0 0\n"), IoError);
    CHECK_THROWS_AS(Polynomial::from_poly4("POLY4 v1 degree=1 terms=1\n0/1 1 0 0 0\n"), IoError);
}

TEST_CASE("product_sum_vanishes certifies exact zero combinations") {
    SplitMix64 rng(31);
    Polynomial a = random_homogeneous(rng, 6, 20);
    Polynomial b = random_homogeneous(rng, 4, 15);
    Polynomial na = -a;
    // a*b + (-a)*b == 0
    CHECK(product_sum_vanishes({{&a, &b}, {&na, &b}}));
    // a*b + a*b != 0
    CHECK_FALSE(product_sum_vanishes({{&a, &b}, {&a, &b}}));
    // scaled variant with denominators
    Polynomial c = a.scaled(Rat(3, 7));
    Polynomial nc = a.scaled(Rat(-3, 7));
    CHECK(product_sum_vanishes({{&c, &b}, {&nc, &b}}));
}
