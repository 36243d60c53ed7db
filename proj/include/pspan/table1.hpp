#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "pspan/bounds.hpp"

namespace pspan {

/// One row of the reference table of bounds for span(P^m x P^111),
/// m = 2^e - 1 or 3*2^e - 1. The embedded values are test fixtures, not
/// computed truths; suzukiUpper is quoted display-only data for the
/// m = 2^e - 1 family.
struct Table1Row {
    int e = 0;
    std::int64_t lower = 0;
    std::int64_t ourUpper = 0;
    std::int64_t swUpper = 0;
    std::optional<std::int64_t> suzukiUpper;
};

const std::array<Table1Row, 13>& table1_reference();

struct Table1Computed {
    int e = 0;
    std::uint64_t m = 0;
    std::int64_t lower = 0;
    std::int64_t ourUpper = 0; ///< best applicable closed form
    std::int64_t swUpper = 0;
};

/// Recomputes a table row for family 1 (m = 2^e - 1) or 3 (m = 3*2^e - 1),
/// n = 111. The "our upper" column is the minimum applicable closed form;
/// the factor dimensions are reduced to (M, N) = ((m+1)/2, 56) internally.
Table1Computed table1_computed_row(int e, int family);

} // namespace pspan
