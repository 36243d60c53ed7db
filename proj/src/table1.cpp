#include "pspan/table1.hpp"

#include <stdexcept>

namespace pspan {

const std::array<Table1Row, 13>& table1_reference() {
    // Quoted reference values for span(P^m x P^111), e = 5..17.
    static const std::array<Table1Row, 13> rows = {{
        {5, 17, 32, 46, 130},
        {6, 19, 46, 78, 148},
        {7, 23, 50, 142, 182},
        {8, 24, 52, 270, 246},
        {9, 25, 78, 526, 374},
        {10, 27, 86, 1038, 630},
        {11, 31, 94, 2062, 1146},
        {12, 32, 102, 4110, 2170},
        {13, 33, 106, 8206, 4218},
        {14, 35, 158, 16398, 8316},
        {15, 39, 166, 32782, 16510},
        {16, 40, 174, 65550, 32894},
        {17, 41, 182, 131086, 65662},
    }};
    return rows;
}

Table1Computed table1_computed_row(int e, int family) {
    if (e < 1 || (family != 1 && family != 3))
        throw std::invalid_argument("table1_computed_row: bad row parameters");
    const std::uint64_t n = 111;
    const std::uint64_t m = (family == 1) ? (1ull << e) - 1 : 3ull * (1ull << e) - 1;

    Table1Computed out;
    out.e = e;
    out.m = m;
    out.lower = lower_vv(m, n);
    out.swUpper = static_cast<std::int64_t>(sw_upper(m, n));

    const std::uint64_t M = (m + 1) / 2, N = (n + 1) / 2; // N = 56
    const std::uint64_t r = nu(static_cast<std::int64_t>(M)).value();
    const std::uint64_t t = nu(static_cast<std::int64_t>(N)).value();

    std::int64_t best = out.swUpper;
    if (auto cf = thm_bnd_closed(r, t))
        best = std::min(best, cf->bound);
    if (auto cf = prop_other_closed(r, t, ResidueInfo::of(N, 1ull << 32)))
        best = std::min(best, cf->bound);
    out.ourUpper = best;
    return out;
}

} // namespace pspan
