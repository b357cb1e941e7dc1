#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frob/limits.hpp"
#include "frob/numth.hpp"

namespace frob {

// Backend selection for count(). Auto picks Popoviciu for pairs, the DP
// table otherwise.
enum class Method { Auto, Popoviciu, Dp, Oracle };

// Number of representations of n by two coprime denominations a, b via the
// closed form; exact integer arithmetic throughout. Negative n counts as 0.
count_t popoviciu_count(std::int64_t a, std::int64_t b, std::int64_t n);

// Coin-combination counting table over [0, limit]. Coins are the outer loop,
// amounts the inner one, so each combination is counted once regardless of
// order. With a cap, counts saturate at the cap instead of growing; at(n)
// then means min(true count, cap).
class DenumerantTable {
public:
    DenumerantTable(DenominationSet denoms, std::int64_t limit,
                    std::optional<std::int64_t> cap = std::nullopt,
                    std::int64_t max_cells = Limits{}.max_table_cells);

    // Count for 0 <= n <= limit(); negative n gives 0, n > limit() throws.
    count_t at(std::int64_t n) const;

    std::int64_t limit() const { return limit_; }
    const DenominationSet& denoms() const { return denoms_; }
    std::optional<std::int64_t> cap() const { return cap_; }

private:
    DenominationSet denoms_;
    std::int64_t limit_;
    std::optional<std::int64_t> cap_;
    std::vector<std::int64_t> counts_;
};

// Representation count of n >= 0 (0 for negative n) with the chosen backend.
count_t count(const DenominationSet& denoms, std::int64_t n,
                   Method method = Method::Auto, const Limits& limits = {});

// Count of representations with every coin used at least once. Equals
// count(n - sum of denominations).
count_t q_count(const DenominationSet& denoms, std::int64_t n,
                     const Limits& limits = {});

} // namespace frob
