#include "frob/denumerant.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "frob/oracle.hpp"

namespace frob {

count_t popoviciu_count(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (a < 1 || b < 1)
        throw InvalidInputError("denominations must be positive, got " + std::to_string(a) +
                                " and " + std::to_string(b));
    if (std::int64_t g = std::gcd(a, b); g != 1)
        throw InvalidInputError("gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") is " +
                                std::to_string(g) + ", expected 1");
    if (n < 0)
        return 0;
    // p = (n - t1*b - t2*a) / (ab) + 1 with t1 = b^{-1} n mod a, t2 = a^{-1} n mod b;
    // the numerator is divisible by ab exactly when the inverses are correct.
    std::int64_t t1 = a == 1 ? 0 : mul_mod(mod_inverse(b, a), n % a, a);
    std::int64_t t2 = b == 1 ? 0 : mul_mod(mod_inverse(a, b), n % b, b);
    __int128 ab = static_cast<__int128>(a) * b;
    __int128 numer = static_cast<__int128>(n) - static_cast<__int128>(t1) * b -
                     static_cast<__int128>(t2) * a;
    if (numer % ab != 0)
        throw InternalError("closed-form numerator not divisible by a*b at n = " + std::to_string(n));
    __int128 p = numer / ab + 1;
    if (p < 0)
        throw InternalError("closed form produced a negative count at n = " + std::to_string(n));
    return static_cast<std::int64_t>(p);
}

DenumerantTable::DenumerantTable(DenominationSet denoms, std::int64_t limit,
                                 std::optional<std::int64_t> cap, std::int64_t max_cells)
    : denoms_(std::move(denoms)), limit_(limit), cap_(cap) {
    if (limit_ < 0)
        throw InvalidInputError("table limit must be >= 0, got " + std::to_string(limit_));
    if (cap_ && *cap_ < 1)
        throw InvalidInputError("saturation cap must be >= 1, got " + std::to_string(*cap_));
    std::int64_t cells = checked_add(limit_, 1);
    if (cells > max_cells)
        throw ResourceLimitError("table needs " + std::to_string(cells) +
                                 " cells, ceiling is " + std::to_string(max_cells));
    counts_.assign(static_cast<std::size_t>(cells), 0);
    counts_[0] = 1;
    for (std::int64_t a : denoms_.values()) {
        for (std::int64_t n = a; n <= limit_; ++n) {
            std::int64_t add = counts_[static_cast<std::size_t>(n - a)];
            std::int64_t& cell = counts_[static_cast<std::size_t>(n)];
            if (cap_)
                cell = add >= *cap_ - cell ? *cap_ : cell + add;
            else
                cell = checked_add(cell, add);
        }
    }
}

count_t DenumerantTable::at(std::int64_t n) const {
    if (n < 0)
        return 0;
    if (n > limit_)
        throw InvalidInputError("n = " + std::to_string(n) + " is beyond the table limit " +
                                std::to_string(limit_));
    return counts_[static_cast<std::size_t>(n)];
}

count_t count(const DenominationSet& denoms, std::int64_t n, Method method,
                   const Limits& limits) {
    if (method == Method::Auto)
        method = denoms.is_pair() ? Method::Popoviciu : Method::Dp;
    switch (method) {
    case Method::Popoviciu:
        if (!denoms.is_pair())
            throw InvalidInputError("the popoviciu backend needs exactly 2 denominations, got " +
                                    std::to_string(denoms.size()));
        return popoviciu_count(denoms.values()[0], denoms.values()[1], n);
    case Method::Dp: {
        if (n < 0)
            return 0;
        return DenumerantTable(denoms, n, std::nullopt, limits.max_table_cells).at(n);
    }
    case Method::Oracle:
        return oracle_count(denoms, n);
    case Method::Auto:
        break;
    }
    throw InternalError("unhandled counting method");
}

count_t q_count(const DenominationSet& denoms, std::int64_t n, const Limits& limits) {
    if (n < denoms.sum())
        return 0;
    return count(denoms, n - denoms.sum(), Method::Auto, limits);
}

} // namespace frob
