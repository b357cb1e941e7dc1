#include "frob/frobenius.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "frob/denumerant.hpp"

namespace frob {

namespace {

void require_coprime_pair(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1)
        throw InvalidInputError("denominations must be positive, got " + std::to_string(a) +
                                " and " + std::to_string(b));
    if (std::int64_t g = std::gcd(a, b); g != 1)
        throw InvalidInputError("gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") is " +
                                std::to_string(g) + ", expected 1");
}

} // namespace

std::int64_t g_k_closed(std::int64_t a, std::int64_t b, std::int64_t k) {
    require_coprime_pair(a, b);
    if (k < 0)
        throw InvalidInputError("k must be >= 0, got " + std::to_string(k));
    __int128 r;
    if (__builtin_mul_overflow(static_cast<__int128>(k) + 1, static_cast<__int128>(a), &r) ||
        __builtin_mul_overflow(r, static_cast<__int128>(b), &r))
        throw OverflowError("(k+1)*a*b overflows for k = " + std::to_string(k));
    r -= a;
    r -= b;
    if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("g_" + std::to_string(k) + "(" + std::to_string(a) + ", " +
                            std::to_string(b) + ") exceeds the 64-bit range");
    return static_cast<std::int64_t>(r);
}

std::int64_t g_k_search(const DenominationSet& denoms, std::int64_t k, const Limits& limits) {
    if (k < 0)
        throw InvalidInputError("k must be >= 0, got " + std::to_string(k));
    std::int64_t cap = checked_add(k, 1);
    std::int64_t window = denoms.min();
    std::int64_t horizon = limits.horizon_start > 0
                               ? limits.horizon_start
                               : checked_mul(checked_mul(2, cap),
                                             checked_mul(denoms.max(), denoms.max()));
    for (;;) {
        if (checked_add(horizon, 1) > limits.max_table_cells)
            throw ResourceLimitError("search horizon " + std::to_string(horizon) +
                                     " exceeds the table ceiling of " +
                                     std::to_string(limits.max_table_cells) + " cells");
        DenumerantTable table(denoms, horizon, cap, limits.max_table_cells);
        std::int64_t run = 0;
        for (std::int64_t n = 0; n <= horizon; ++n) {
            run = table.at(n) > k ? run + 1 : 0;
            if (run < window)
                continue;
            // counts stay above k from the window on; the answer sits below it
            for (std::int64_t m = n - window; m >= 0; --m)
                if (table.at(m) <= k)
                    return m;
            return -1;
        }
        horizon = checked_mul(horizon, 2);
    }
}

std::int64_t smallest_k_rep(const DenominationSet& denoms, std::int64_t k, const Limits& limits) {
    if (k < 1)
        throw InvalidInputError("k must be >= 1, got " + std::to_string(k));
    if (denoms.is_pair()) {
        std::int64_t a = denoms.values()[0], b = denoms.values()[1];
        return k == 1 ? a : checked_mul(checked_mul(a, b), k - 1);
    }
    std::int64_t bound = limits.horizon_start > 0 ? limits.horizon_start
                                                  : g_k_search(denoms, k, limits);
    if (bound >= 1) {
        DenumerantTable table(denoms, bound, checked_add(k, 2), limits.max_table_cells);
        for (std::int64_t n = 1; n <= bound; ++n)
            if (table.at(n) == k)
                return n;
    }
    throw ResourceLimitError("no integer with exactly " + std::to_string(k) +
                             " representations below horizon " + std::to_string(bound));
}

std::int64_t count_k_rep(std::int64_t a, std::int64_t b, std::int64_t k) {
    require_coprime_pair(a, b);
    if (k < 1)
        throw InvalidInputError("k must be >= 1 (the k = 0 count is count_nonrep), got " +
                                std::to_string(k));
    std::int64_t ab = checked_mul(a, b);
    return k == 1 ? ab - 1 : ab;
}

std::int64_t count_nonrep(std::int64_t a, std::int64_t b) {
    require_coprime_pair(a, b);
    std::int64_t prod = checked_mul(a - 1, b - 1);
    if (prod % 2 != 0)
        throw InternalError("(a-1)(b-1) is odd for a coprime pair");
    return prod / 2;
}

std::pair<std::int64_t, std::int64_t> k_rep_interval(std::int64_t a, std::int64_t b,
                                                     std::int64_t k) {
    require_coprime_pair(a, b);
    if (k < 2)
        throw InvalidInputError("k must be >= 2, got " + std::to_string(k));
    std::int64_t lo = checked_add(checked_add(g_k_closed(a, b, k - 2), a), b);
    return {lo, g_k_closed(a, b, k)};
}

std::vector<std::int64_t> list_k_rep(const DenominationSet& denoms, std::int64_t k,
                                     const Limits& limits) {
    if (k < 0)
        throw InvalidInputError("k must be >= 0, got " + std::to_string(k));
    std::int64_t bound = denoms.is_pair()
                             ? g_k_closed(denoms.values()[0], denoms.values()[1], k)
                             : g_k_search(denoms, k, limits);
    std::vector<std::int64_t> out;
    if (bound < 1)
        return out;
    // Complete by construction: any n with exactly k representations is <= g_k.
    DenumerantTable table(denoms, bound, checked_add(k, 2), limits.max_table_cells);
    for (std::int64_t n = 1; n <= bound; ++n)
        if (table.at(n) == k)
            out.push_back(n);
    return out;
}

KFrobeniusReport k_frobenius_report(const DenominationSet& denoms, std::int64_t k,
                                    const Limits& limits) {
    if (k < 0)
        throw InvalidInputError("k must be >= 0, got " + std::to_string(k));
    KFrobeniusReport rep{denoms, k, -1, std::nullopt, 0, std::nullopt};
    if (denoms.is_pair()) {
        std::int64_t a = denoms.values()[0], b = denoms.values()[1];
        rep.g_k = g_k_closed(a, b, k);
        if (k == 0) {
            rep.count = count_nonrep(a, b);
            if (rep.count > 0)
                rep.interval = {{1, rep.g_k}};
        } else {
            rep.smallest = smallest_k_rep(denoms, k, limits);
            rep.count = count_k_rep(a, b, k);
            rep.interval = k == 1 ? std::pair{*rep.smallest, rep.g_k}
                                  : k_rep_interval(a, b, k);
        }
        return rep;
    }
    rep.g_k = g_k_search(denoms, k, limits);
    std::vector<std::int64_t> list = list_k_rep(denoms, k, limits);
    rep.count = static_cast<std::int64_t>(list.size());
    if (!list.empty()) {
        if (k >= 1)
            rep.smallest = list.front();
        rep.interval = {{list.front(), list.back()}};
    }
    return rep;
}

} // namespace frob
