#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "pspan/dyadic.hpp"
#include "pspan/obstruction.hpp"

namespace pspan {

/// Lower bound span(P^m x P^n) >= V(m) + V(n).
std::int64_t lower_vv(std::uint64_t m, std::uint64_t n);

enum class CaseId {
    none,
    bnd1, bnd2, bnd3, bnd4,     // the four main closed-form cases
    other1, other2, other3, other4, // the small-t cases
    other3ext,                  // third small-t case pushed 1 or 2 steps out
};

const char* case_name(CaseId id);

struct CaseParams {
    std::uint64_t r = 0, t = 0;
    std::uint64_t e = 0, k = 0;
    CaseId caseId = CaseId::none;
};

struct ClosedFormBound {
    std::int64_t bound = 0;
    CaseParams params;
};

/// Closed-form upper bound for span(P^{2M-1} x P^{2N-1}) from r = nu(M),
/// t = nu(N), r >= 4, t <= r. Matches r + t against 2^e + 2e + c and the
/// t-side conditions; returns nothing when no case applies.
std::optional<ClosedFormBound> thm_bnd_closed(std::uint64_t r, std::uint64_t t);

/// Congruence information about N beyond its 2-exponent.
struct ResidueInfo {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 0;

    static ResidueInfo of(std::uint64_t N, std::uint64_t modulus) {
        return {N % modulus, modulus};
    }
};

/// The small-t closed forms, including the residue-gated branches and the
/// one- and two-step extensions of the third case. Residue-gated branches
/// fire only when nResidueInfo establishes the congruence. Returns the
/// best (smallest) matching bound.
std::optional<ClosedFormBound>
prop_other_closed(std::uint64_t r, std::uint64_t t,
                  std::optional<ResidueInfo> nResidueInfo);

/// span(P^m x P^n) = V(m) + V(n) exactly, when neither m+1 nor n+1 is
/// divisible by 16, or when either factor is P^1, P^3 or P^7.
std::optional<std::int64_t> exact_equ(std::uint64_t m, std::uint64_t n);

struct BoundReport {
    std::uint64_t m = 0, n = 0;
    std::int64_t lower = 0;
    std::int64_t swUpper = 0;
    std::int64_t restrictionUpper = 0;
    std::optional<std::pair<std::int64_t, Certificate>> bpUpper;
    std::optional<std::int64_t> exact;
    std::int64_t bestUpper = 0;

    bool operator==(const BoundReport&) const = default;
};

struct InconsistentBounds : std::logic_error {
    using std::logic_error::logic_error;
};

/// Aggregates every bound for span(P^m x P^n). The obstruction engine is
/// consulted only for odd m, n >= 3 (its domain); scanLimit 0 means the
/// default ceiling. Throws InconsistentBounds if any upper bound falls
/// below the lower bound, which would be an implementation bug.
BoundReport report(std::uint64_t m, std::uint64_t n, std::uint64_t scanLimit = 0);

} // namespace pspan
