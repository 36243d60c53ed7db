#include <doctest.h>

#include <algorithm>
#include <random>

#include "pspan/obstruction.hpp"
#include "pspan/bounds.hpp"
#include "pspan/serialize.hpp"

using namespace pspan;

namespace {

bool has_term(const ObstructionSum& sum, const BasisTriple& t, std::uint64_t v) {
    return std::any_of(sum.terms.begin(), sum.terms.end(), [&](const WeightedTriple& w) {
        return w.triple == t && w.coef == Valuation::of(v);
    });
}

} // namespace

TEST_CASE("build_sum worked example") {
    ObstructionSum sum = build_sum(32, 8, 25);
    CHECK(has_term(sum, {16, 8, 1}, 1));
    CHECK(has_term(sum, {16, 4, 5}, 2));
    CHECK(has_term(sum, {8, 8, 9}, 2));
    for (const auto& w : sum.terms) {
        CHECK(w.triple.valid());
        CHECK(w.triple.i <= 32);
        CHECK(w.triple.j <= 8);
        CHECK(w.triple.i + w.triple.j + w.triple.k == 25);
        CHECK(w.coef.is_finite());
    }
    // no term below the worked example's leading valuations
    for (const auto& w : sum.terms)
        CHECK(w.coef.at_least(1));
}

TEST_CASE("build_sum degenerate shapes") {
    ObstructionSum sum = build_sum(12, 10, 3);
    REQUIRE(sum.terms.size() == 1);
    CHECK(sum.terms[0].triple == BasisTriple{1, 1, 1});
    CHECK(sum.terms[0].coef == nu_binom(12, 1) + nu_binom(10, 1));

    CHECK_THROWS_AS(build_sum(12, 10, 2), EmptySum);
    CHECK_THROWS_AS(build_sum(1, 10, 9), std::invalid_argument);
}

TEST_CASE("build_sum (16,2,13) has a unique minimal term") {
    ObstructionSum sum = build_sum(16, 2, 13);
    CHECK(has_term(sum, {8, 2, 3}, 1));
    int minimal = 0;
    for (const auto& w : sum.terms)
        if (w.coef == Valuation::of(1))
            ++minimal;
    CHECK(minimal == 1);
}

TEST_CASE("certify worked example") {
    CertifyResult r = certify(32, 8, 25);
    REQUIRE(r.certified());
    CHECK(r.certificate->bound == 46);
    CHECK(r.certificate->leading.filtration == 2);
    CHECK(r.certificate->leading.support == TripleSet{{4, 6, 1}, {6, 4, 1}, {8, 2, 1}});

    // deterministic
    CertifyResult again = certify(32, 8, 25);
    REQUIRE(again.certified());
    CHECK(*again.certificate == *r.certificate);
}

TEST_CASE("certify (16,2,13)") {
    CertifyResult r = certify(16, 2, 13);
    REQUIRE(r.certified());
    CHECK(r.certificate->bound == 22);
    CHECK(r.certificate->leading.filtration == 1);
    CHECK(r.certificate->leading.support == TripleSet{{4, 1, 1}});
}

TEST_CASE("certify inconclusive cases") {
    CHECK(certify(16, 4, 13).status == CertifyStatus::Inconclusive);
    CHECK(certify(16, 4, 3).status == CertifyStatus::AllTermsKilled);
    CHECK(certify(16, 4, 2).status == CertifyStatus::EmptySum);
}

TEST_CASE("best_bound_scan") {
    auto out = best_bound_scan(32, 8, 3, 30);
    REQUIRE(out.has_value());
    CHECK(out->bound <= 46);
    CHECK(out->bound == 46); // first success is s' = 25
    CHECK(out->sPrime == 25);
    CHECK(verify_certificate(out->certificate));

    CHECK_FALSE(best_bound_scan(16, 4, 3, 14 - 1).has_value());
    CHECK_THROWS_AS(best_bound_scan(32, 8, 2, 30), std::invalid_argument);

    auto first = best_bound_scan(32, 8, 3, 30, ScanMode::FirstHit);
    REQUIRE(first.has_value());
    CHECK(first->bound == out->bound);
    CHECK(first->sPrime == out->sPrime);
    CHECK(out->successes.size() >= first->successes.size());
}

TEST_CASE("certificate replay and tampering") {
    CertifyResult r = certify(32, 8, 25);
    REQUIRE(r.certified());
    Certificate cert = *r.certificate;
    CHECK(verify_certificate(cert));

    Certificate bad = cert;
    bad.sPrime += 1;
    CHECK_FALSE(verify_certificate(bad));

    bad = cert;
    bad.leading.support.pop_back();
    CHECK_FALSE(verify_certificate(bad));

    bad = cert;
    bad.leading.filtration += 1;
    CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("certificate json round trip") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<std::uint64_t> rr(4, 9), tt(1, 4);
    int done = 0;
    while (done < 25) {
        std::uint64_t M = 1ull << rr(rng), N = 1ull << tt(rng);
        auto out = best_bound_scan(M, N, 3, 80, ScanMode::FirstHit);
        if (!out)
            continue;
        ++done;
        std::string doc = certificate_to_json(out->certificate);
        Certificate back = certificate_from_json(doc);
        CHECK(back == out->certificate);
        CHECK(verify_certificate(back));
    }
    CHECK_THROWS(certificate_from_json("{\"M\": 3}"));
    CHECK_THROWS(certificate_from_json("not json"));
    CHECK_THROWS(certificate_from_json(
        R"({"M":32,"N":8,"sPrime":25,"bound":46,"filtration":2,"support":[[0,1,1]]})"));
}

TEST_CASE("scan values on the N = 56 column") {
    // Engine results for M = 2^{e-1}, N = 56 (the P^m x P^111 family).
    // Mostly these agree with the closed forms; where the level-by-level
    // analysis is sharper the scan value is pinned here as a regression
    // guard (each certificate replays).
    struct Row {
        std::uint64_t M;
        std::int64_t bound;
        std::uint64_t sPrime;
    };
    const Row rows[] = {
        {16, 32, 18},     {32, 46, 25},    {64, 50, 27},    {128, 52, 28},
        {256, 78, 41},    {512, 80, 42},   // sharper than the closed form 86
        {1024, 94, 49},   {2048, 102, 53}, {4096, 106, 55},
        {8192, 152, 78},  {16384, 158, 81}, // sharper than 158, 166
        {32768, 162, 83}, // sharper than 174
        {65536, 190, 97}, // weaker than the stretched closed form 182
    };
    for (const Row& row : rows) {
        auto out = best_bound_scan(row.M, 56, 3, row.sPrime + 4, ScanMode::FirstHit);
        REQUIRE(out.has_value());
        CHECK(out->bound == row.bound);
        CHECK(out->sPrime == row.sPrime);
        CHECK(verify_certificate(out->certificate));
    }
    // the u = 3 companion of a row gives the same answer
    auto out = best_bound_scan(3 * 512, 56, 3, 46, ScanMode::FirstHit);
    REQUIRE(out.has_value());
    CHECK(out->bound == 80);
}

TEST_CASE("exhaustive and first-hit scans agree on the minimum") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<std::uint64_t> rr(4, 9), tt(1, 5);
    int compared = 0;
    while (compared < 10) {
        const std::uint64_t M = 1ull << rr(rng), N = 1ull << tt(rng);
        auto full = best_bound_scan(M, N, 3, 60);
        auto first = best_bound_scan(M, N, 3, 60, ScanMode::FirstHit);
        REQUIRE(full.has_value() == first.has_value());
        if (!full)
            continue;
        ++compared;
        CHECK(full->bound == first->bound);
        CHECK(full->sPrime == first->sPrime);
        CHECK(full->certificate == first->certificate);
        CHECK(full->successes.front() == first->successes.front());
    }
}

TEST_CASE("report json round trip") {
    for (auto [m, n] : {std::pair<std::uint64_t, std::uint64_t>{31, 111},
                        {63, 15},
                        {2, 2},
                        {3, 15}}) {
        BoundReport rep = report(m, n);
        CHECK(report_from_json(report_to_json(rep)) == rep);
    }
}
