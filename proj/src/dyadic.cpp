#include "pspan/dyadic.hpp"

#include <bit>
#include <algorithm>

namespace pspan {

Valuation nu(std::int64_t n) {
    if (n == 0)
        return Valuation::infinite();
    std::uint64_t u = n < 0 ? ~static_cast<std::uint64_t>(n) + 1
                            : static_cast<std::uint64_t>(n);
    return Valuation::of(static_cast<std::uint64_t>(std::countr_zero(u)));
}

Valuation nu_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return Valuation::infinite();
    std::uint64_t a = k, b = n - k;
    std::uint64_t carry = 0, carries = 0;
    while (a | b | carry) {
        std::uint64_t s = (a & 1) + (b & 1) + carry;
        carry = s >> 1;
        carries += carry;
        a >>= 1;
        b >>= 1;
    }
    return Valuation::of(carries);
}

Valuation nu_binom_digit_sum(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return Valuation::infinite();
    int s = std::popcount(k) + std::popcount(n - k) - std::popcount(n);
    return Valuation::of(static_cast<std::uint64_t>(s));
}

AdamsNumber adams_V(std::uint64_t n) {
    std::uint64_t v = nu(static_cast<std::int64_t>(n + 1)).value();
    AdamsNumber r;
    r.n = n;
    r.a = static_cast<std::uint32_t>(v / 4);
    r.b = static_cast<std::uint32_t>(v % 4);
    r.value = 8ull * r.a + (1ull << r.b) - 1;
    return r;
}

std::uint64_t sw_upper(std::uint64_t m, std::uint64_t n) {
    std::uint64_t vm = nu(static_cast<std::int64_t>(m + 1)).value();
    std::uint64_t vn = nu(static_cast<std::int64_t>(n + 1)).value();
    return (1ull << vm) + (1ull << vn) - 2;
}

std::uint64_t sspan_pn(std::uint64_t n) {
    return (n % 2 == 1) ? adams_V(n).value : 0;
}

std::uint64_t restriction_upper(std::uint64_t m, std::uint64_t n) {
    return std::min(m + sspan_pn(n), n + sspan_pn(m));
}

} // namespace pspan
