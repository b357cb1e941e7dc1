#include "frob/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace frob {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw OverflowError("integer overflow in " + std::to_string(x) + " + " + std::to_string(y));
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw OverflowError("integer overflow in " + std::to_string(x) + " - " + std::to_string(y));
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw OverflowError("integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
    return r;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    if (m < 1)
        throw InvalidInputError("modulus must be positive, got " + std::to_string(m));
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t m) {
    if (m < 1)
        throw InvalidInputError("modulus must be positive, got " + std::to_string(m));
    __int128 p = static_cast<__int128>(x) * y;
    std::int64_t r = static_cast<std::int64_t>(p % m);
    return r < 0 ? r + m : r;
}

std::int64_t gcd_all(std::span<const std::int64_t> values) {
    if (values.empty())
        throw InvalidInputError("gcd of an empty list");
    std::int64_t g = 0;
    for (std::int64_t v : values) {
        if (v < 1)
            throw InvalidInputError("gcd requires positive integers, got " + std::to_string(v));
        g = std::gcd(g, v);
    }
    return g;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    if (m < 2)
        throw InvalidInputError("modulus must be >= 2, got " + std::to_string(m));
    if (x < 1)
        throw InvalidInputError("mod_inverse requires a positive argument, got " + std::to_string(x));
    // Extended Euclid on (x mod m, m); track only the coefficient of x.
    std::int64_t r0 = floor_mod(x, m), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw InvalidInputError("no inverse: gcd(" + std::to_string(x) + ", " + std::to_string(m) +
                                ") = " + std::to_string(r0));
    return floor_mod(s0, m);
}

Fraction fractional_part(std::int64_t numer, std::int64_t denom) {
    if (denom < 1)
        throw InvalidInputError("denominator must be positive, got " + std::to_string(denom));
    return Fraction{floor_mod(numer, denom), denom};
}

DenominationSet::DenominationSet(std::vector<std::int64_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    if (values_.size() < 2)
        throw InvalidInputError("need at least 2 denominations, got " + std::to_string(values_.size()));
    for (std::int64_t v : values_)
        if (v < 1)
            throw InvalidInputError("denominations must be positive, got " + std::to_string(v));
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
        throw InvalidInputError("duplicate denominations are not allowed");
    std::int64_t g = gcd_all(values_);
    if (g != 1)
        throw InvalidInputError("gcd of denominations is " + std::to_string(g) + ", expected 1");
    for (std::int64_t v : values_)
        sum_ = checked_add(sum_, v);
}

} // namespace frob
