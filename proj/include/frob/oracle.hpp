#pragma once

#include <cstdint>
#include <vector>

#include "frob/limits.hpp"
#include "frob/numth.hpp"

namespace frob {

// One representation: multiplicities aligned with the sorted denominations.
using Representation = std::vector<std::int64_t>;

// Every representation of n, in lexicographic order of the multiplicity
// vectors. Throws ResourceLimitError once more than max_out would be emitted.
std::vector<Representation> enumerate_reps(const DenominationSet& denoms, std::int64_t n,
                                           std::int64_t max_out = Limits{}.max_reps_out);

// Independent recursive count: no tables, no closed forms. Slow by design;
// exists to cross-check the other backends.
count_t oracle_count(const DenominationSet& denoms, std::int64_t n);

} // namespace frob
