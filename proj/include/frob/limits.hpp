#pragma once

#include <cstdint>

namespace frob {

// Resource ceilings shared by the table-building and enumeration backends.
// horizon_start == 0 means the caller lets the search pick its own bound.
struct Limits {
    std::int64_t max_table_cells = 100'000'000;
    std::int64_t max_reps_out = 1'000'000;
    std::int64_t horizon_start = 0;
};

} // namespace frob
