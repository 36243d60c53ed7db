#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pspan/qmodule.hpp"

namespace pspan {

/// The Euler-class obstruction sum for (M, N, s'): all terms
/// [i, j, s'-i-j] with 1 <= i <= M, 1 <= j <= N, s'-i-j >= 1, carrying
/// coefficient valuation nu(C(M,i)) + nu(C(N,j)). Nonvanishing of the sum
/// in Q proves span(P^{2M-1} x P^{2N-1}) <= 2s' - 4.
struct ObstructionSum {
    std::uint64_t M = 0, N = 0, sPrime = 0;
    std::vector<WeightedTriple> terms;
};

struct EmptySum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ObstructionSum build_sum(std::uint64_t M, std::uint64_t N, std::uint64_t sPrime);

/// A verified statement span(P^{2M-1} x P^{2N-1}) <= bound = 2s'-4, with
/// the surviving leading class as evidence.
struct Certificate {
    std::uint64_t M = 0, N = 0, sPrime = 0;
    std::int64_t bound = 0;
    LeadingClass leading;

    bool operator==(const Certificate&) const = default;
};

/// Constructs the certificate and enforces the soundness sanity check
/// bound >= V(2M-1) + V(2N-1); a violation is an engine bug.
Certificate make_certificate(std::uint64_t M, std::uint64_t N,
                             std::uint64_t sPrime, LeadingClass leading);

enum class CertifyStatus { Certified, Inconclusive, AllTermsKilled, EmptySum };

struct CertifyResult {
    CertifyStatus status = CertifyStatus::Inconclusive;
    std::optional<Certificate> certificate;

    bool certified() const { return status == CertifyStatus::Certified; }
};

/// Builds the obstruction sum and runs the leading-filtration test.
/// Inconclusive (in all its flavors) is a first-class result, never an
/// error: it means no bound is established at this s'.
CertifyResult certify(std::uint64_t M, std::uint64_t N, std::uint64_t sPrime);

enum class ScanMode {
    Exhaustive, ///< evaluate the whole range, record every success
    FirstHit,   ///< stop at the first success (same minimum: 2s'-4 increases)
};

struct ScanOutcome {
    std::int64_t bound = 0;
    std::uint64_t sPrime = 0;
    Certificate certificate;
    std::vector<std::uint64_t> successes; ///< all certifying s' (Exhaustive)
};

/// Evaluates certify over sMin..sMax and returns the minimum certified
/// bound with its certificate, or nullopt when nothing certifies.
std::optional<ScanOutcome> best_bound_scan(std::uint64_t M, std::uint64_t N,
                                           std::uint64_t sMin,
                                           std::uint64_t sMax,
                                           ScanMode mode = ScanMode::Exhaustive);

/// Default scan ceiling: past sw_upper/2 + 2 the Stiefel-Whitney bound is
/// already at least as good.
std::uint64_t default_scan_max(std::uint64_t M, std::uint64_t N);

/// Replays the leading-filtration computation from (M, N, s') and checks
/// the stored bound and leading class bit for bit.
bool verify_certificate(const Certificate& cert);

} // namespace pspan
