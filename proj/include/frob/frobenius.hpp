#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frob/limits.hpp"
#include "frob/numth.hpp"

namespace frob {

// Largest n with at most k representations by coprime a, b:
// g_k = (k+1)ab - a - b. k = 0 is the classical Frobenius number.
std::int64_t g_k_closed(std::int64_t a, std::int64_t b, std::int64_t k);

// Same quantity found by scanning a capped counting table; works for any
// number of denominations. Returns -1 when every positive integer already
// has more than k representations (only possible when 1 is a denomination).
std::int64_t g_k_search(const DenominationSet& denoms, std::int64_t k,
                        const Limits& limits = {});

// Smallest positive n with exactly k representations, k >= 1. Pairs use the
// closed forms (min(a,b) for k = 1, ab(k-1) for k >= 2); larger sets scan a
// capped table and throw ResourceLimitError when nothing below the search
// horizon matches.
std::int64_t smallest_k_rep(const DenominationSet& denoms, std::int64_t k,
                            const Limits& limits = {});

// How many positive n have exactly k representations by coprime a, b:
// ab - 1 for k = 1, ab for every k >= 2.
std::int64_t count_k_rep(std::int64_t a, std::int64_t b, std::int64_t k);

// How many positive n have no representation at all: (a-1)(b-1)/2.
std::int64_t count_nonrep(std::int64_t a, std::int64_t b);

// Closed interval holding every n with exactly k representations, k >= 2:
// [g_{k-2} + a + b, g_k].
std::pair<std::int64_t, std::int64_t> k_rep_interval(std::int64_t a, std::int64_t b,
                                                     std::int64_t k);

// Every positive n with exactly k representations, ascending. k = 0 lists
// the non-representable integers.
std::vector<std::int64_t> list_k_rep(const DenominationSet& denoms, std::int64_t k,
                                     const Limits& limits = {});

// Bundle of the quantities above for one (denoms, k) query. smallest is
// empty when no n qualifies, interval when no two-sided bound applies.
struct KFrobeniusReport {
    DenominationSet denoms;
    std::int64_t k = 0;
    std::int64_t g_k = -1;
    std::optional<std::int64_t> smallest;
    std::int64_t count = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> interval;
};

KFrobeniusReport k_frobenius_report(const DenominationSet& denoms, std::int64_t k,
                                    const Limits& limits = {});

} // namespace frob
