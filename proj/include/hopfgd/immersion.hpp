#pragma once

// Bounds for sums of multiples of the Hopf bundle and the resulting
// immersion dimensions of real projective spaces.

#include <hopfgd/numtheory.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hopfgd {

/// Max of sum_{i<t} g(e+i, k_i) over k_0 + ... + k_{t-1} = ell.
/// Requires e >= 7, t >= 1, 0 <= ell <= 2^{e-3} - 1.
Int tower_bound(int e, int t, Int ell);

/// tower_bound(e, t, ell) for t = 1..t_max; element t-1 holds level t.
std::vector<Int> tower_bounds(int e, int t_max, Int ell);

/// Max of sum g(exponents[i], k_i) over ordered k_i >= 0 summing to k.
/// Exponents must be >= 7 and pairwise distinct.
Int gd_sum_bound(std::span<const int> exponents, Int k);

/// Max over 1 <= t <= 2^{e-3} of tower_bound(e, t, 2^{e-3}-1). Throws
/// std::logic_error if the value exceeds 2^e - e - 6 or has not stabilized.
Int normal_gd_bound(int e);

struct BoundReport {
    Int n = 0;
    /// 2^{e+1} - e - 7 for n = 2^e - 1, e >= 7.
    std::optional<Int> lifting;
    /// 2n - alpha(n) - 4 for n = 7 mod 8.
    std::optional<Int> milgram;
    /// 2n - D for n = 7 mod 8 with alpha(n) >= 7.
    std::optional<Int> dm;
    /// Nonimmersion dimension 2^{e+1} - 2e - delta for n = 2^e - 1, e >= 3.
    std::optional<Int> james_nonimm;
    /// Least immersion dimension present, with every source attaining it.
    std::optional<Int> best;
    std::vector<std::string> best_sources;
    /// Gap from best to the next distinct immersion bound.
    std::optional<Int> margin;

    /// Tab-separated `n source value` lines, `-` for absent values, then
    /// `best sources value` and, when defined, `margin value`.
    std::string to_text() const;
};

BoundReport immerse(Int n);

} // namespace hopfgd
