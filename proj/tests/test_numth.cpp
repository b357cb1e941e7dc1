#include <doctest.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "frob/errors.hpp"
#include "frob/numth.hpp"

using namespace frob;

TEST_SUITE("numth") {

// ================================================================
//  checked arithmetic
// ================================================================

TEST_CASE("checked ops compute and overflow loudly") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_sub(2, 3) == -1);
    CHECK(checked_mul(-4, 5) == -20);
    std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<std::int64_t>::min(), 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
}

TEST_CASE("floor_mod normalizes negatives") {
    CHECK(floor_mod(7, 3) == 1);
    CHECK(floor_mod(-1, 5) == 4);
    CHECK(floor_mod(-10, 5) == 0);
    CHECK(floor_mod(0, 1) == 0);
    CHECK(floor_mod(123, 1) == 0);
    CHECK_THROWS_AS(floor_mod(1, 0), InvalidInputError);
    CHECK_THROWS_AS(floor_mod(1, -3), InvalidInputError);
}

TEST_CASE("mul_mod survives products past 64 bits") {
    std::int64_t x = 4'000'000'000LL, m = 1'000'000'007LL;
    // (x*x) mod m, reference value from 128-bit arithmetic done inline
    __int128 ref = (static_cast<__int128>(x) * x) % m;
    CHECK(mul_mod(x, x, m) == static_cast<std::int64_t>(ref));
    CHECK(mul_mod(-3, 5, 7) == 6);
}

// ================================================================
//  gcd_all
// ================================================================

TEST_CASE("gcd_all basics") {
    std::vector<std::int64_t> v1{3, 5}, v2{6, 10, 15}, v3{4, 6};
    CHECK(gcd_all(v1) == 1);
    CHECK(gcd_all(v2) == 1);
    CHECK(gcd_all(v3) == 2);
    std::vector<std::int64_t> empty;
    CHECK_THROWS_AS(gcd_all(empty), InvalidInputError);
    std::vector<std::int64_t> with_zero{0, 4};
    CHECK_THROWS_AS(gcd_all(with_zero), InvalidInputError);
}

TEST_CASE("gcd_all is permutation-invariant and idempotent under repeats") {
    std::vector<std::int64_t> v{12, 18, 30};
    std::vector<std::int64_t> perm{30, 12, 18};
    CHECK(gcd_all(v) == gcd_all(perm));
    std::vector<std::int64_t> repeated{12, 18, 30, 18};
    CHECK(gcd_all(v) == gcd_all(repeated));
}

// ================================================================
//  mod_inverse
// ================================================================

TEST_CASE("mod_inverse known values") {
    CHECK(mod_inverse(5, 3) == 2);
    CHECK(mod_inverse(3, 5) == 2);
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(1, 2) == 1);
    CHECK_THROWS_AS(mod_inverse(4, 6), InvalidInputError);
    CHECK_THROWS_AS(mod_inverse(3, 1), InvalidInputError);
    CHECK_THROWS_AS(mod_inverse(0, 5), InvalidInputError);
}

TEST_CASE("mod_inverse randomized round trip") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> pick(2, 10'000);
    int done = 0;
    while (done < 1500) {
        std::int64_t m = pick(rng), x = pick(rng);
        if (std::gcd(x, m) != 1)
            continue;
        std::int64_t y = mod_inverse(x, m);
        CHECK(y >= 1);
        CHECK(y <= m - 1);
        CHECK(mul_mod(x, y, m) == 1);
        ++done;
    }
}

// ================================================================
//  fractional_part
// ================================================================

TEST_CASE("fractional_part exact values") {
    CHECK(fractional_part(-1, 5) == Fraction{4, 5});
    CHECK(fractional_part(10, 5) == Fraction{0, 5});
    CHECK(fractional_part(20, 3) == Fraction{2, 3});
    CHECK_THROWS_AS(fractional_part(1, 0), InvalidInputError);
}

TEST_CASE("fractional parts of n and -n pair up") {
    // {x} + {-x} is 1 off the integers and 0 on them, checked in residues
    for (std::int64_t d = 1; d <= 40; ++d)
        for (std::int64_t n = -100; n <= 100; ++n) {
            std::int64_t sum = fractional_part(n, d).residue + fractional_part(-n, d).residue;
            CHECK(sum == (n % d == 0 ? 0 : d));
        }
}

// ================================================================
//  DenominationSet
// ================================================================

TEST_CASE("DenominationSet sorts and validates") {
    DenominationSet a({5, 3});
    CHECK(a.values() == std::vector<std::int64_t>{3, 5});
    CHECK(a.size() == 2);
    CHECK(a.min() == 3);
    CHECK(a.max() == 5);
    CHECK(a.sum() == 8);
    CHECK(a.is_pair());

    DenominationSet b({15, 6, 10});
    CHECK(b.values() == std::vector<std::int64_t>{6, 10, 15});
    CHECK_FALSE(b.is_pair());
    CHECK(b.sum() == 31);
}

TEST_CASE("DenominationSet rejections") {
    CHECK_THROWS_AS(DenominationSet({7}), InvalidInputError);
    CHECK_THROWS_AS(DenominationSet({}), InvalidInputError);
    CHECK_THROWS_AS(DenominationSet({3, 3, 5}), InvalidInputError);
    CHECK_THROWS_AS(DenominationSet({0, 3}), InvalidInputError);
    CHECK_THROWS_AS(DenominationSet({-2, 3}), InvalidInputError);
    CHECK_THROWS_WITH_AS(DenominationSet({4, 6}), doctest::Contains("gcd"), InvalidInputError);
}

} // TEST_SUITE
