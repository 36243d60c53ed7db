#include "pspan/obstruction.hpp"

#include <algorithm>

namespace pspan {

ObstructionSum build_sum(std::uint64_t M, std::uint64_t N, std::uint64_t sPrime) {
    if (M < 2 || N < 2)
        throw std::invalid_argument("build_sum: need M, N >= 2");
    ObstructionSum sum;
    sum.M = M;
    sum.N = N;
    sum.sPrime = sPrime;
    const std::uint64_t iMax = std::min(M, sPrime >= 2 ? sPrime - 2 : 0);
    for (std::uint64_t i = 1; i <= iMax; ++i) {
        const Valuation vi = nu_binom(M, i);
        const std::uint64_t jMax = std::min(N, sPrime - 1 - i);
        for (std::uint64_t j = 1; j <= jMax; ++j) {
            const Valuation coef = vi + nu_binom(N, j);
            if (!coef.is_finite())
                continue; // zero binomial, term absent
            BasisTriple t{static_cast<std::int64_t>(i),
                          static_cast<std::int64_t>(j),
                          static_cast<std::int64_t>(sPrime - i - j)};
            sum.terms.push_back({t, coef});
        }
    }
    if (sum.terms.empty())
        throw EmptySum("build_sum: no valid term for these (M, N, s')");
    return sum;
}

Certificate make_certificate(std::uint64_t M, std::uint64_t N,
                             std::uint64_t sPrime, LeadingClass leading) {
    if (leading.support.empty())
        throw std::logic_error("certificate with empty support");
    Certificate cert;
    cert.M = M;
    cert.N = N;
    cert.sPrime = sPrime;
    cert.bound = 2 * static_cast<std::int64_t>(sPrime) - 4;
    cert.leading = std::move(leading);
    const std::int64_t lower =
        static_cast<std::int64_t>(adams_V(2 * M - 1).value + adams_V(2 * N - 1).value);
    if (cert.bound < lower)
        throw std::logic_error("certificate contradicts the vector-field lower bound");
    return cert;
}

CertifyResult certify(std::uint64_t M, std::uint64_t N, std::uint64_t sPrime) {
    ObstructionSum sum;
    try {
        sum = build_sum(M, N, sPrime);
    } catch (const EmptySum&) {
        return {CertifyStatus::EmptySum, std::nullopt};
    }
    LeadingResult lead = leading_image(sum.terms);
    switch (lead.status) {
    case LeadingStatus::Class:
        return {CertifyStatus::Certified,
                make_certificate(M, N, sPrime, std::move(lead.cls))};
    case LeadingStatus::AllTermsKilled:
        return {CertifyStatus::AllTermsKilled, std::nullopt};
    case LeadingStatus::Inconclusive:
    default:
        return {CertifyStatus::Inconclusive, std::nullopt};
    }
}

std::optional<ScanOutcome> best_bound_scan(std::uint64_t M, std::uint64_t N,
                                           std::uint64_t sMin, std::uint64_t sMax,
                                           ScanMode mode) {
    if (sMin < 3 || sMin > sMax)
        throw std::invalid_argument("best_bound_scan: need 3 <= sMin <= sMax");
    std::optional<ScanOutcome> best;
    for (std::uint64_t s = sMin; s <= sMax; ++s) {
        CertifyResult r = certify(M, N, s);
        if (!r.certified())
            continue;
        if (!best) {
            // 2s'-4 is increasing in s', so the first success is the minimum.
            best = ScanOutcome{r.certificate->bound, s, *r.certificate, {}};
            if (mode == ScanMode::FirstHit) {
                best->successes.push_back(s);
                return best;
            }
        }
        best->successes.push_back(s);
    }
    return best;
}

std::uint64_t default_scan_max(std::uint64_t M, std::uint64_t N) {
    return sw_upper(2 * M - 1, 2 * N - 1) / 2 + 2;
}

bool verify_certificate(const Certificate& cert) {
    if (cert.bound != 2 * static_cast<std::int64_t>(cert.sPrime) - 4)
        return false;
    try {
        CertifyResult replay = certify(cert.M, cert.N, cert.sPrime);
        return replay.certified() && *replay.certificate == cert;
    } catch (const std::invalid_argument&) {
        return false; // parameters outside the engine's domain
    }
}

} // namespace pspan
