#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "creals/intops.hpp"
#include "oracles.hpp"

using namespace creals;
using oracles::brute_root_floor;
using oracles::gmp_root_floor;
using oracles::rand_long;

TEST_CASE("isqrt: pinned values agree with brute force") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(200) == 14);
    CHECK(isqrt(200) == brute_root_floor(200, 2));
    CHECK(isqrt(196) == 14);
    CHECK(isqrt(196) == brute_root_floor(196, 2));
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt: defining inequality on random inputs") {
    std::mt19937 gen(101);
    for (int trial = 0; trial < 300; ++trial) {
        Int k = rand_long(gen, 0, 1000000);
        if (trial % 3 == 0) k = k * k + rand_long(gen, 0, 1000);  // exercise big inputs
        Int r = isqrt(k);
        CHECK(r >= 0);
        CHECK(r * r <= k);
        CHECK((r + 1) * (r + 1) > k);
    }
}

TEST_CASE("introot: pinned values and identities") {
    CHECK(introot(8, 3) == 2);
    CHECK(introot(20000, 2) == 141);
    CHECK(introot(20000, 2) == brute_root_floor(20000, 2));
    CHECK(introot(0, 5) == 0);
    CHECK(introot(1, 7) == 1);

    std::mt19937 gen(102);
    for (int trial = 0; trial < 50; ++trial) {
        Int k = rand_long(gen, 0, 1000000000L);
        CHECK(introot(k, 1) == k);
    }
    CHECK_THROWS_AS(introot(5, 0), std::domain_error);
    CHECK_THROWS_AS(introot(-2, 3), std::domain_error);
}

TEST_CASE("introot: defining inequality and cross-checks on random inputs") {
    std::mt19937 gen(103);
    for (int trial = 0; trial < 200; ++trial) {
        Int k = rand_long(gen, 0, 1000000000L);
        unsigned long b = static_cast<unsigned long>(rand_long(gen, 1, 12));
        if (trial % 4 == 0) k *= k;
        Int m = introot(k, b);
        CHECK(ipow(m, b) <= k);
        CHECK(ipow(m + 1, b) > k);
        // Independent route: GMP's own nth root.
        CHECK(m == gmp_root_floor(k, b));
        // Degree-2 agreement with isqrt (different code path).
        CHECK(introot(k, 2) == isqrt(k));
    }
    // Small range, exhaustively against brute force.
    for (long k = 0; k <= 120; ++k)
        for (unsigned long b = 1; b <= 5; ++b)
            CHECK(introot(k, b) == brute_root_floor(k, b));
}

TEST_CASE("encode_int/decode_int: pinned codes and round trips") {
    CHECK(encode_int(3) == 6);
    CHECK(encode_int(-3) == 7);
    CHECK(encode_int(0) == 0);
    CHECK(decode_int(6) == 3);
    CHECK(decode_int(7) == -3);
    CHECK(decode_int(0) == 0);

    for (long z = -50; z <= 50; ++z) CHECK(decode_int(encode_int(z)) == z);
    // Code 1 is the one redundancy of the pairing: it decodes to -0 = 0,
    // which re-encodes as 0. Every other code round-trips.
    for (long n = 0; n <= 100; ++n) {
        if (n == 1) continue;
        CHECK(encode_int(decode_int(n)) == n);
    }
    CHECK(encode_int(decode_int(1)) == 0);
    CHECK_THROWS_AS(decode_int(-1), std::domain_error);
}

TEST_CASE("rat_floor: pinned values and sandwich law") {
    CHECK(rat_floor(5, 2) == 2);
    CHECK(rat_floor(-3, 2) == -2);
    CHECK(rat_floor(14, 7) == 2);
    CHECK_THROWS_AS(rat_floor(1, 0), std::domain_error);

    std::mt19937 gen(104);
    for (int trial = 0; trial < 300; ++trial) {
        Int a = rand_long(gen, -1000000, 1000000);
        Int b = rand_long(gen, 1, 10000);
        Int k = rat_floor(a, b);
        CHECK(k * b <= a);
        CHECK((k + 1) * b > a);
    }
}

TEST_CASE("rational helpers: canonical form, floor/ceil, inv_index") {
    Rat half = make_rat(2, 4);
    CHECK(half.get_num() == 1);
    CHECK(half.get_den() == 2);
    CHECK(make_rat(-6, 4) == make_rat(-3, 2));
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(make_rat(1, -2), std::domain_error);

    CHECK(floor_rat(make_rat(5, 2)) == 2);
    CHECK(floor_rat(make_rat(-5, 2)) == -3);
    CHECK(floor_rat(make_rat(4, 2)) == 2);
    CHECK(ceil_rat(make_rat(5, 2)) == 3);
    CHECK(ceil_rat(make_rat(-5, 2)) == -2);
    CHECK(ceil_rat(make_rat(4, 2)) == 2);

    CHECK(inv_index(4) == make_rat(1, 4));
    CHECK_THROWS_AS(inv_index(0), std::domain_error);

    std::mt19937 gen(105);
    for (int trial = 0; trial < 200; ++trial) {
        Rat q = oracles::rand_rat(gen, 10000, 10000);
        Int f = floor_rat(q);
        Int c = ceil_rat(q);
        CHECK(Rat(f) <= q);
        CHECK(Rat(f + 1) > q);
        CHECK(Rat(c) >= q);
        CHECK(Rat(c - 1) < q);
    }
}

TEST_CASE("simplest_rat_in: lowest-denominator representative of an interval") {
    CHECK(simplest_rat_in(make_rat(3, 10), make_rat(34, 100)) == make_rat(1, 3));
    CHECK(simplest_rat_in(make_rat(-34, 100), make_rat(-3, 10)) == make_rat(-1, 3));
    CHECK(simplest_rat_in(make_rat(5, 2), make_rat(7, 2)) == 3);
    CHECK(simplest_rat_in(make_rat(-1, 10), make_rat(1, 5)) == 0);
    CHECK(simplest_rat_in(make_rat(5, 7), make_rat(5, 7)) == make_rat(5, 7));
    CHECK(simplest_rat_in(make_rat(141421, 100000), make_rat(141422, 100000)) ==
          make_rat(577, 408));
    CHECK_THROWS_AS(simplest_rat_in(make_rat(1, 2), make_rat(1, 3)), std::domain_error);

    std::mt19937 gen(107);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = oracles::rand_rat(gen, 5000, 300);
        Rat b = oracles::rand_rat(gen, 5000, 300);
        if (a > b) std::swap(a, b);
        Rat r = simplest_rat_in(a, b);
        CHECK(r >= a);
        CHECK(r <= b);
        // Minimality: no strictly smaller denominator has a multiple inside.
        for (Int d = 1; d < r.get_den(); ++d)
            CHECK(Rat(ceil_rat(Rat(a * d))) > b * d);
    }
}

TEST_CASE("ipow: matches repeated multiplication") {
    std::mt19937 gen(106);
    for (int trial = 0; trial < 100; ++trial) {
        Int base = rand_long(gen, -50, 50);
        unsigned long e = static_cast<unsigned long>(rand_long(gen, 0, 12));
        Int expect = 1;
        for (unsigned long i = 0; i < e; ++i) expect *= base;
        CHECK(ipow(base, e) == expect);
    }
}
