#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frob/errors.hpp"

namespace frob {

// Counts are exact nonnegative 64-bit integers; all arithmetic on them is
// overflow-checked (see checked_* below), never wrapping.
using count_t = std::int64_t;

// Overflow-checked signed 64-bit arithmetic. Throws OverflowError.
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_sub(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

// x mod m normalized to [0, m), m >= 1. Works for negative x.
std::int64_t floor_mod(std::int64_t x, std::int64_t m);

// (x * y) mod m with a 128-bit intermediate, result in [0, m).
std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t m);

// gcd of a nonempty list of positive integers.
std::int64_t gcd_all(std::span<const std::int64_t> values);

// Inverse of x modulo m (m >= 2, gcd(x, m) = 1), normalized to [1, m-1].
// Extended Euclid. Throws InvalidInputError when no inverse exists.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m);

// Exact fractional part residue/denom with residue in [0, denom).
struct Fraction {
    std::int64_t residue = 0;
    std::int64_t denom = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// {numer/denom} computed exactly in integers, denom >= 1. Never floats:
// the closed-form denumerant below needs these bit-exact.
Fraction fractional_part(std::int64_t numer, std::int64_t denom);

// A validated coin set: d >= 2 distinct positive integers, sorted
// ascending, gcd 1. Immutable once constructed; every operation in the
// library runs over one of these.
class DenominationSet {
public:
    explicit DenominationSet(std::vector<std::int64_t> values);

    const std::vector<std::int64_t>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::int64_t min() const { return values_.front(); }
    std::int64_t max() const { return values_.back(); }
    std::int64_t sum() const { return sum_; }
    bool is_pair() const { return values_.size() == 2; }

    friend bool operator==(const DenominationSet&, const DenominationSet&) = default;

private:
    std::vector<std::int64_t> values_;
    std::int64_t sum_ = 0;
};

} // namespace frob
