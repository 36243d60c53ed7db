#pragma once

#include <cstdint>
#include <stdexcept>

namespace pspan {

/// A 2-adic valuation: a nonnegative count, or Infinite for nu(0).
class Valuation {
public:
    static Valuation infinite() { return Valuation(true, 0); }
    static Valuation of(std::uint64_t v) { return Valuation(false, v); }

    bool is_finite() const { return !infinite_; }

    /// Finite value; throws on the Infinite marker.
    std::uint64_t value() const {
        if (infinite_)
            throw std::logic_error("Valuation::value() on Infinite");
        return v_;
    }

    /// coefficient valuation of a product is the sum; Infinite absorbs.
    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_)
            return infinite();
        return of(v_ + o.v_);
    }

    bool at_least(std::uint64_t k) const { return infinite_ || v_ >= k; }

    bool operator==(const Valuation& o) const {
        return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return v_ < o.v_;
    }

private:
    Valuation(bool inf, std::uint64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::uint64_t v_;
};

/// Exponent of 2 in n. nu(0) is the Infinite marker, not an error: zero
/// coefficients must stay representable in obstruction sums.
Valuation nu(std::int64_t n);

/// nu of the binomial coefficient C(n, k), as the number of carries when
/// adding k and n-k in base 2. Returns Infinite for k > n (C = 0).
Valuation nu_binom(std::uint64_t n, std::uint64_t k);

/// Same quantity via base-2 digit sums; cross-checked against nu_binom.
Valuation nu_binom_digit_sum(std::uint64_t n, std::uint64_t k);

/// The vector-field number V(n) = 8a + 2^b - 1 where nu(n+1) = 4a + b,
/// 0 <= b <= 3. span(S^n) = span(P^n) = V(n).
struct AdamsNumber {
    std::uint64_t n;
    std::uint32_t a;
    std::uint32_t b;
    std::uint64_t value;
};

AdamsNumber adams_V(std::uint64_t n);

/// Stiefel-Whitney upper bound 2^{nu(m+1)} + 2^{nu(n+1)} - 2 for
/// span(P^m x P^n).
std::uint64_t sw_upper(std::uint64_t m, std::uint64_t n);

/// Stable span of P^n: V(n) for odd n, 0 for even n.
std::uint64_t sspan_pn(std::uint64_t n);

/// Restriction bound min(m + sspan(P^n), n + sspan(P^m)), applied in both
/// factor orders since the product is symmetric.
std::uint64_t restriction_upper(std::uint64_t m, std::uint64_t n);

} // namespace pspan
