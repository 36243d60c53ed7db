#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pspan/dyadic.hpp"

namespace pspan {

/// Basis element [i,j,k] of a filtration quotient of
/// Q = B_*(P1) (x) B_*(P1) (x) B_*(P1), B = BP<3>. Indices are >= 1.
struct BasisTriple {
    std::int64_t i, j, k;

    std::int64_t degree() const { return 2 * (i + j + k) - 3; }
    std::int64_t min_entry() const;
    bool valid() const { return i >= 1 && j >= 1 && k >= 1; }

    bool operator==(const BasisTriple&) const = default;
    bool operator<(const BasisTriple& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return k < o.k;
    }
};

/// A GF(2) set of basis triples, kept sorted with even multiplicities
/// cancelled.
using TripleSet = std::vector<BasisTriple>;

/// Sort and cancel pairs mod 2 in place.
void parity_collapse(TripleSet& v);

/// The six permutations of (2^t, 2^{t+1}, 2^{t+2}).
std::array<std::array<std::uint64_t, 3>, 6> perms124(unsigned t);

/// Image of 2^m [e] in F_m/F_{m+1}, as the v3^m-coefficient: write m in
/// binary with d digits, subtract one permutation of (2^t, 2^{t+1}, 2^{t+2})
/// per digit in all 6^d ways, drop results with a non-positive entry, and
/// cancel mod 2. reduce(e, 0) = {e}.
TripleSet reduce(const BasisTriple& e, std::uint64_t m);

/// Exact kill rule 2 z_1 = 0: a term with even coefficient and some index
/// equal to 1 is zero in Q, not just in the leading quotient.
bool kill_exact(const BasisTriple& e, const Valuation& coef);

/// An element of F_s/F_{s+1}: v3^s times the GF(2) sum of the support.
struct LeadingClass {
    std::uint64_t filtration = 0;
    TripleSet support;

    bool operator==(const LeadingClass&) const = default;
};

struct WeightedTriple {
    BasisTriple triple;
    Valuation coef;
};

enum class LeadingStatus {
    Class,          ///< nonzero leading class found
    Inconclusive,   ///< every filtration level vanished
    AllTermsKilled, ///< nothing survived the exact kill rule
};

struct LeadingResult {
    LeadingStatus status = LeadingStatus::Inconclusive;
    LeadingClass cls;

    bool certified() const { return status == LeadingStatus::Class; }
};

/// Leading-filtration analysis of a sum of terms 2^{coef} u [triple] with u
/// odd. Killed and zero-coefficient terms are removed; the remaining terms
/// are grouped by valuation and scanned in increasing filtration order. A
/// level whose combined image vanishes contributes nothing deeper and is
/// dropped, matching how the worked reductions discard such terms. The
/// first nonzero level is returned; if every level dies the result is
/// Inconclusive.
LeadingResult leading_image(const std::vector<WeightedTriple>& terms);

} // namespace pspan
