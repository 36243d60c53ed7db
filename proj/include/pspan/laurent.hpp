#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pspan {

/// Exponent vector of a monomial z1^e1 z2^e2 z3^e3; negative exponents
/// allowed. Ordering is lexicographic, purely for canonical term order.
struct Exponents {
    std::int32_t e1 = 0, e2 = 0, e3 = 0;

    Exponents operator+(const Exponents& o) const {
        return {e1 + o.e1, e2 + o.e2, e3 + o.e3};
    }
    bool operator==(const Exponents&) const = default;
    bool operator<(const Exponents& o) const {
        if (e1 != o.e1) return e1 < o.e1;
        if (e2 != o.e2) return e2 < o.e2;
        return e3 < o.e3;
    }
};

/// Sparse Laurent polynomial over GF(2): the set of monomials present.
/// Addition is symmetric difference, so p + p = 0 holds eagerly.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<Exponents> terms);

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial({0, 0, 0}); }
    static LaurentPoly monomial(const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Exponents>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;

private:
    std::vector<Exponents> terms_; // sorted, no duplicates
};

/// Unreduced quotient of Laurent polynomials. Equality is always decided
/// by cross multiplication; no gcd is ever computed.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den = LaurentPoly::one();

    RationalFn() = default;
    RationalFn(LaurentPoly n, LaurentPoly d);
    static RationalFn from_poly(LaurentPoly p) { return {std::move(p), LaurentPoly::one()}; }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    bool is_zero() const { return num.is_zero(); }
};

/// a/b = c/d iff a*d = c*b.
bool rational_eq(const RationalFn& a, const RationalFn& b);

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Mat3 = std::array<std::array<RationalFn, 3>, 3>;
using Vec3 = std::array<RationalFn, 3>;

/// Solves a 3x3 linear system over the GF(2) Laurent rationals by Cramer's
/// rule. Throws SingularSystem when the determinant is zero.
Vec3 cramer3(const Mat3& system, const Vec3& rhs);

/// The defining 3x3 system of the series f0, f1, f2 with v_i = v3 * f_i:
///   f0 = f1 z1^-1 + f2 z1^-3 + z1^-7
///   f1 = f0 z2    + f2 z2^-2 + z2^-6
///   f2 = f0 z3^3  + f1 z3^2  + z3^-4
/// Returns (f0, f1, f2); each solution satisfies all three equations
/// (checked internally, a failure would be a fatal bug).
Vec3 f_series();

/// f0 in closed form: the six monomials with exponents the permutations
/// of (-1, -2, -4).
LaurentPoly f0_closed_form();

/// A monomial v_{vIndex} z1^e1 z2^e2 z3^e3 appearing in the rewriting
/// frontier; vIndex 3 marks a finished term of the v3-coefficient.
struct MixedMonomial {
    int vIndex = 0;
    Exponents z;

    bool operator==(const MixedMonomial&) const = default;
    bool operator<(const MixedMonomial& o) const {
        if (vIndex != o.vIndex) return vIndex < o.vIndex;
        return z < o.z;
    }
};

/// Termination measure 3 nu_{z1} + nu_{z2} - 2 nu_{v0} + nu_{v2}; every
/// rewrite step strictly decreases it.
std::int64_t measure(const MixedMonomial& m);

/// One application of the substitution rule for v0, v1 or v2; the three
/// children of the monomial. Requires vIndex in {0, 1, 2}.
std::array<MixedMonomial, 3> rewrite_step(const MixedMonomial& m);

struct CutoffTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expands v_target by repeated substitution, collecting the
/// v3-coefficient. Live monomials whose measure falls below cutoffMeasure
/// are discarded; the returned polynomial is restricted to monomials whose
/// accumulated parity can no longer change at this cutoff (measure >=
/// cutoffMeasure - 1). Throws CutoffTooSmall when no monomial is stable.
LaurentPoly rewrite_iterative(int target, std::int64_t cutoffMeasure);

} // namespace pspan
