#pragma once

#include <cstdint>

namespace hopfgd {

using Int = std::int64_t;

/// max(0, n), written <n> in formulas.
class PosPart {
public:
    constexpr explicit PosPart(Int n) : value_(n > 0 ? n : 0) {}

    constexpr Int value() const { return value_; }
    constexpr operator Int() const { return value_; }

private:
    Int value_;
};

constexpr PosPart pos_part(Int n) { return PosPart(n); }

/// 2-adic valuation of n >= 1. Throws std::domain_error otherwise.
Int nu(Int n);

/// Number of ones in the binary expansion of n >= 1.
Int alpha(Int n);

/// nu(k) for even k, -4 for odd k; requires k >= 2.
Int nu_prime(Int k);

/// 2-adic valuation of the binomial coefficient C(a, b), by Kummer's
/// carry count alpha(b) + alpha(a - b) - alpha(a).
Int nu_binom(Int a, Int b);

/// Count of 1 <= i <= n with i mod 8 in {0, 1, 2, 4}.
Int phi(Int n);

/// rho(4a + b) = 8a + 2^b for 0 <= b <= 3.
Int rho(Int k);

/// 2^t for 0 <= t <= 62.
Int pow2(int t);

} // namespace hopfgd
