#include "pspan/bounds.hpp"

#include <algorithm>

namespace pspan {

std::int64_t lower_vv(std::uint64_t m, std::uint64_t n) {
    return static_cast<std::int64_t>(adams_V(m).value + adams_V(n).value);
}

const char* case_name(CaseId id) {
    switch (id) {
    case CaseId::bnd1: return "bnd1";
    case CaseId::bnd2: return "bnd2";
    case CaseId::bnd3: return "bnd3";
    case CaseId::bnd4: return "bnd4";
    case CaseId::other1: return "other1";
    case CaseId::other2: return "other2";
    case CaseId::other3: return "other3";
    case CaseId::other4: return "other4";
    case CaseId::other3ext: return "other3ext";
    case CaseId::none: default: return "none";
    }
}

std::optional<ClosedFormBound> thm_bnd_closed(std::uint64_t r, std::uint64_t t) {
    if (r < 4 || t < 1 || t > r)
        return std::nullopt;
    if (r == 4 && t == 1) // the one admissible e = 0 instance
        return ClosedFormBound{22, {r, t, 0, 0, CaseId::bnd4}};
    const std::uint64_t s = r + t;
    // r + t determines e: consecutive windows [2^e+2e+2, 2^{e+1}+2e+3] tile.
    for (std::uint64_t e = 1; (1ull << e) + 2 * e + 2 <= s; ++e) {
        if (s > (2ull << e) + 2 * e + 3)
            continue;
        const std::uint64_t c = s - (1ull << e) - 2 * e;
        const std::int64_t p2 = 1ll << e;
        if (c == 2) {
            if (t > e)
                return ClosedFormBound{14 * p2 - 4, {r, t, e, 0, CaseId::bnd1}};
            return std::nullopt;
        }
        if (c == 3) {
            if (t > e + 1)
                return ClosedFormBound{18 * p2 - 4, {r, t, e, 0, CaseId::bnd2}};
            return std::nullopt;
        }
        const std::uint64_t k = c - 4;
        if (t <= e)
            return std::nullopt;
        if (k + 2 < (1ull << e))
            return ClosedFormBound{20 * p2 + 8 * (std::int64_t)k + 6,
                                   {r, t, e, k, CaseId::bnd3}};
        return ClosedFormBound{24 * p2 + 4 * (std::int64_t)k - 2,
                               {r, t, e, k, CaseId::bnd4}};
    }
    return std::nullopt;
}

namespace {

bool residue_is(const std::optional<ResidueInfo>& info, std::uint64_t want,
                std::uint64_t mod) {
    return info && info->modulus % mod == 0 && info->residue % mod == want;
}

} // namespace

std::optional<ClosedFormBound>
prop_other_closed(std::uint64_t r, std::uint64_t t,
                  std::optional<ResidueInfo> nResidueInfo) {
    if (r < 1 || t < 1)
        return std::nullopt;
    std::optional<ClosedFormBound> best;
    auto consider = [&](std::int64_t bound, std::uint64_t e, std::uint64_t k, CaseId id) {
        if (!best || bound < best->bound)
            best = ClosedFormBound{bound, {r, t, e, k, id}};
    };
    for (std::uint64_t e = 1; (1ull << e) + e + 2 <= r; ++e) {
        const std::uint64_t q = 1ull << (e + 2);
        const std::int64_t p2 = 1ll << e;
        if (r == (1ull << e) + e + 2) {
            if (t == e + 1 ||
                (e > 1 && t == e && residue_is(nResidueInfo, 3ull << e, q)))
                consider(20 * p2 - 2, e, 0, CaseId::other1);
            if ((t == 1 && e == 1) ||
                (t == e && residue_is(nResidueInfo, 1ull << e, q)))
                consider(22 * p2 - 6, e, 0, CaseId::other2);
        }
        if (r == (1ull << e) + e + 3) {
            if (t == e && residue_is(nResidueInfo, 3ull << e, q))
                consider(20 * p2 + 6, e, 0, CaseId::other3);
            if (t == e)
                consider(38 * p2 - 6, e, 0, CaseId::other4);
        }
        // The third case extends one or two steps further out in r with the
        // same congruence on N; each step adds 8 to the bound.
        for (std::uint64_t d = 1; d <= 2; ++d)
            if (r == (1ull << e) + e + 3 + d && t == e &&
                residue_is(nResidueInfo, 3ull << e, q))
                consider(20 * p2 + 6 + 8 * (std::int64_t)d, e, d, CaseId::other3ext);
    }
    return best;
}

std::optional<std::int64_t> exact_equ(std::uint64_t m, std::uint64_t n) {
    auto small = [](std::uint64_t x) { return x == 1 || x == 3 || x == 7; };
    const bool noDiv16 =
        nu(static_cast<std::int64_t>(m + 1)).value() < 4 &&
        nu(static_cast<std::int64_t>(n + 1)).value() < 4;
    if (noDiv16 || small(m) || small(n))
        return lower_vv(m, n);
    return std::nullopt;
}

BoundReport report(std::uint64_t m, std::uint64_t n, std::uint64_t scanLimit) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("report: need m, n >= 1");
    BoundReport rep;
    rep.m = m;
    rep.n = n;
    rep.lower = lower_vv(m, n);
    rep.swUpper = static_cast<std::int64_t>(sw_upper(m, n));
    rep.restrictionUpper = static_cast<std::int64_t>(restriction_upper(m, n));

    if (m % 2 == 1 && n % 2 == 1 && m >= 3 && n >= 3) {
        const std::uint64_t M = (m + 1) / 2, N = (n + 1) / 2;
        // keep interactive reports snappy; scanLimit overrides the ceiling
        const std::uint64_t sMax =
            scanLimit ? scanLimit : std::min<std::uint64_t>(default_scan_max(M, N), 600);
        if (auto scan = best_bound_scan(M, N, 3, sMax, ScanMode::FirstHit))
            rep.bpUpper = {scan->bound, scan->certificate};
    }
    rep.exact = exact_equ(m, n);

    rep.bestUpper = std::min(rep.swUpper, rep.restrictionUpper);
    if (rep.bpUpper)
        rep.bestUpper = std::min(rep.bestUpper, rep.bpUpper->first);

    if (rep.bestUpper < rep.lower)
        throw InconsistentBounds("bound report: an upper bound fell below the lower bound");
    if (rep.exact && (*rep.exact != rep.lower || *rep.exact != rep.bestUpper))
        throw InconsistentBounds("bound report: exact value out of line with bounds");
    return rep;
}

} // namespace pspan
