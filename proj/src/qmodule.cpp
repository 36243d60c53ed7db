#include "pspan/qmodule.hpp"

#include <algorithm>
#include <map>

namespace pspan {

namespace {

constexpr int kPermIndex[6][3] = {
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
};

} // namespace

std::int64_t BasisTriple::min_entry() const {
    return std::min(i, std::min(j, k));
}

void parity_collapse(TripleSet& v) {
    std::sort(v.begin(), v.end());
    TripleSet out;
    out.reserve(v.size());
    for (std::size_t p = 0; p < v.size();) {
        std::size_t q = p;
        while (q < v.size() && v[q] == v[p])
            ++q;
        if ((q - p) & 1)
            out.push_back(v[p]);
        p = q;
    }
    v.swap(out);
}

std::array<std::array<std::uint64_t, 3>, 6> perms124(unsigned t) {
    const std::uint64_t base[3] = {1ull << t, 2ull << t, 4ull << t};
    std::array<std::array<std::uint64_t, 3>, 6> out{};
    for (int p = 0; p < 6; ++p)
        for (int s = 0; s < 3; ++s)
            out[p][s] = base[kPermIndex[p][s]];
    return out;
}

namespace {

using PermTable = std::array<std::array<std::uint64_t, 3>, 6>;

// Depth-first over one permutation choice per binary digit of m, pruning as
// soon as an entry drops below 1. Future subtractions are positive, so a
// non-positive partial entry can never recover.
void reduce_dfs(const BasisTriple& cur, const std::vector<PermTable>& tables,
                std::size_t depth, TripleSet& acc) {
    if (depth == tables.size()) {
        acc.push_back(cur);
        return;
    }
    for (const auto& p : tables[depth]) {
        BasisTriple next{cur.i - static_cast<std::int64_t>(p[0]),
                         cur.j - static_cast<std::int64_t>(p[1]),
                         cur.k - static_cast<std::int64_t>(p[2])};
        if (!next.valid())
            continue;
        reduce_dfs(next, tables, depth + 1, acc);
    }
}

} // namespace

TripleSet reduce(const BasisTriple& e, std::uint64_t m) {
    if (m == 0)
        return {e};
    std::vector<PermTable> tables;
    for (unsigned t = 0; t < 64; ++t)
        if ((m >> t) & 1)
            tables.push_back(perms124(t));
    TripleSet acc;
    reduce_dfs(e, tables, 0, acc);
    parity_collapse(acc);
    return acc;
}

bool kill_exact(const BasisTriple& e, const Valuation& coef) {
    return coef.at_least(1) && e.min_entry() == 1;
}

LeadingResult leading_image(const std::vector<WeightedTriple>& terms) {
    std::map<std::uint64_t, std::vector<BasisTriple>> by_level;
    for (const auto& t : terms) {
        if (kill_exact(t.triple, t.coef))
            continue;
        if (!t.coef.is_finite())
            continue; // zero coefficient
        by_level[t.coef.value()].push_back(t.triple);
    }
    if (by_level.empty())
        return {LeadingStatus::AllTermsKilled, {}};
    for (const auto& [level, triples] : by_level) {
        TripleSet image;
        for (const auto& tr : triples) {
            TripleSet part = reduce(tr, level);
            image.insert(image.end(), part.begin(), part.end());
        }
        parity_collapse(image);
        if (!image.empty())
            return {LeadingStatus::Class, LeadingClass{level, std::move(image)}};
    }
    return {LeadingStatus::Inconclusive, {}};
}

} // namespace pspan
