#pragma once

// Bound functions for the geometric dimension of 2^e copies of the Hopf line
// bundle over RP^{8k+7}.
//
// Notation used in comments:
//   g(e,k)  upper bound for gd(2^e xi_{8k+7})             gd_bound
//   G(e,k)  complement 8k - g(e,k)                        gd_complement
//   S(k)    large-e limit of G                            stable_complement
//   V, S' = S - V, R = S + nu' - V                        additive_length, ...
//   G'(e,k) unstabilized complement                       basic_complement

#include <hopfgd/numtheory.hpp>

#include <optional>
#include <vector>

namespace hopfgd {

/// Largest k accepted by the k-only functions; keeps 8k inside 63 bits.
inline constexpr Int kMaxArgument = Int{1} << 59;

/// Smallest level e for which g(e,k) is defined.
inline constexpr int kMinLevel = 7;

/// S(k) for k >= 1, with the convention S(1) = 8.
Int stable_complement(Int k);

/// V(k) for k >= 2, k mod 8 != 1.
Int additive_length(Int k);

/// S'(k) = S(k) - V(k).
Int reduced_stable_complement(Int k);

/// R(k) = S(k) + nu'(k) - V(k). A part following k in a decomposition
/// must have 2-adic valuation exceeding R(k).
Int split_threshold(Int k);

/// k = k_0 + ... + k_r with nu(k_i) > R(k_{i-1}), ordered by increasing
/// valuation. A single part means k is indecomposable.
struct Decomposition {
    std::vector<Int> parts;

    Int total() const;
    std::size_t splits() const { return parts.empty() ? 0 : parts.size() - 1; }
    bool decomposable() const { return parts.size() > 1; }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The unique maximal decomposition of k >= 2, k mod 8 != 1.
Decomposition decompose(Int k);

/// Sum over i >= 1 of <min(nu(k_i), e-6) - R(k_{i-1})> for the maximal
/// decomposition of k.
Int deviation(int e, Int k);

/// G'(e,k) = <e - 6 - nu'(k)> - deviation(e,k), for k mod 8 != 1.
Int basic_complement(int e, Int k);

/// True when 2 <= k <= 2^{e-3}, the range where G(e,k) is defined.
bool complement_defined(int e, Int k);

/// The G(e,k) rule without the single exceptional value at (7,9).
Int complement_formula(int e, Int k);

/// G(e,k) for 2 <= k <= 2^{e-3}; G(7,9) = 5. Served from a memo table for
/// small arguments.
Int gd_complement(int e, Int k);

/// 8k - g(e,k) for 0 <= k <= 2^{e-3}: equals G(e,k) for k >= 2 and 0, 8
/// at k = 0, 1.
Int extended_complement(int e, Int k);

/// g(e,k) for e >= 7, k >= 0.
Int gd_bound(int e, Int k);

struct GTableEntry {
    int e = 0;
    Int k = 0;
    Int g_value = 0;
    std::optional<Int> G_value;

    friend bool operator==(const GTableEntry&, const GTableEntry&) = default;
};

GTableEntry table_entry(int e, Int k);

/// Starting bounds m(k) for e = 7, 0 <= k <= 16.
Int starter_bound(Int k);

/// m'(k): 13 at k = 2, otherwise m(k).
Int starter_bound_hp(Int k);

/// g_1(e,k) = max g(e-1,i) + g(e-1,k-i) over max(0,k-2^{e-4}) <= i <= k/2,
/// for e >= 8 and 0 <= k <= 2^{e-3}.
Int product_bound(int e, Int k);

} // namespace hopfgd
