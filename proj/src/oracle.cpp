#include "frob/oracle.hpp"

#include <string>

namespace frob {

namespace {

// Ascending multiplicity loop on the first coin gives lexicographic output order.
void emit_reps(const std::vector<std::int64_t>& coins, std::size_t idx, std::int64_t remaining,
               Representation& current, std::vector<Representation>& out, std::int64_t max_out) {
    if (idx + 1 == coins.size()) {
        if (remaining % coins[idx] == 0) {
            if (static_cast<std::int64_t>(out.size()) >= max_out)
                throw ResourceLimitError("more than " + std::to_string(max_out) +
                                         " representations, raise the output ceiling to list them");
            current[idx] = remaining / coins[idx];
            out.push_back(current);
        }
        return;
    }
    std::int64_t m = 0;
    for (std::int64_t r = remaining; r >= 0; r -= coins[idx], ++m) {
        current[idx] = m;
        emit_reps(coins, idx + 1, r, current, out, max_out);
    }
    current[idx] = 0;
}

// Counter-only twin of emit_reps, recursing from the largest coin down so the
// base case is a single divisibility test on the smallest coin.
std::int64_t count_reps(const std::vector<std::int64_t>& coins, std::size_t idx,
                        std::int64_t remaining) {
    if (idx == 0)
        return remaining % coins[0] == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t r = remaining; r >= 0; r -= coins[idx])
        total = checked_add(total, count_reps(coins, idx - 1, r));
    return total;
}

} // namespace

std::vector<Representation> enumerate_reps(const DenominationSet& denoms, std::int64_t n,
                                           std::int64_t max_out) {
    std::vector<Representation> out;
    if (n < 0)
        return out;
    Representation current(denoms.size(), 0);
    emit_reps(denoms.values(), 0, n, current, out, max_out);
    return out;
}

count_t oracle_count(const DenominationSet& denoms, std::int64_t n) {
    if (n < 0)
        return 0;
    return count_reps(denoms.values(), denoms.size() - 1, n);
}

} // namespace frob
