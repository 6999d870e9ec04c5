#include <doctest.h>

#include "fmc/intmath.hpp"

using namespace fmc;

TEST_CASE("primality on small and large inputs") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91)); // 7 * 13
    CHECK(is_prime_u64(2147483647ULL));
    CHECK_FALSE(is_prime_u64(2147483647ULL * 3));
    // 13^12 - 1 is composite; its largest prime factor is checked below
    uint128 q = 1;
    for (int i = 0; i < 12; ++i) q *= 13;
    CHECK_FALSE(is_prime_u128(q - 1));
}

TEST_CASE("factorize recombines") {
    for (uint64_t n : {2ULL, 12ULL, 97ULL, 600ULL, 1048576ULL, 23298085122480ULL}) {
        uint128 prod = 1;
        auto fac = factorize(n);
        for (uint128 f : fac) {
            CHECK(is_prime_u128(f));
            prod *= f;
        }
        CHECK(prod == uint128(n));
        CHECK(std::is_sorted(fac.begin(), fac.end()));
    }
}

TEST_CASE("totient small values") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(5) == 4);
    CHECK(totient(6) == 2);
    CHECK(totient(24) == 8);
    CHECK(totient(30) == 8);
}

TEST_CASE("valuation and lcm") {
    CHECK(valuation(48, 2) == 4);
    CHECK(valuation(48, 3) == 1);
    CHECK(valuation(5, 7) == 0);
    CHECK(lcm128(4, 6) == 12);
    CHECK(lcm128(3, 5) == 15);
}

TEST_CASE("to_string on 128-bit values") {
    CHECK(to_string_u128(uint128(0)) == "0");
    CHECK(to_string_u128(uint128(9409)) == "9409");
    // 2^100 = 1267650600228229401496703205376
    uint128 v = uint128(1) << 100;
    CHECK(to_string_u128(v) == "1267650600228229401496703205376");
    CHECK(to_string_i128(int128(-42)) == "-42");
}

TEST_CASE("deterministic rng") {
    Rng a(7), b(7);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(8);
    bool differs = false;
    Rng a2(7);
    for (int i = 0; i < 10; ++i) differs |= (a2.next() != c.next());
    CHECK(differs);
}
