#pragma once

// Exhaustive range sweeps of the numerical properties of the bound
// functions in gtable.hpp and of the section-combination algorithm.

#include <hopfgd/numtheory.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopfgd {

struct VerificationReport {
    std::string property_name;
    std::string range_descr;
    std::int64_t checked = 0;
    bool passed = true;
    std::optional<std::vector<Int>> first_counterexample;
    /// Observations that are reported but not asserted.
    std::vector<std::string> notes;

    /// `PROPERTY<TAB>RANGE<TAB>CHECKED<TAB>PASS|FAIL<TAB><counterexample or ->`
    std::string to_line() const;
};

/// Inclusive integer range, written `lo..hi`.
struct IntRange {
    Int lo = 0;
    Int hi = 0;

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses `a..b` (or a single integer). Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

struct SweepRanges {
    std::optional<IntRange> e;
    std::optional<IntRange> k;
};

/// G(e-1,i) + G(e-1,j) + 1 - G(e,i+j) for e >= 8, 2 <= i, j <= 2^{e-4}.
Int check_gineq(int e, Int i, Int j);

enum class Minus1Case { Plus8, Plus7, Plus6, NonPositive, AtMost6 };

std::string_view to_string(Minus1Case c);

struct Minus1Check {
    Minus1Case tag;
    Int difference = 0;
    bool holds = false;
};

/// Classifies (e,k) from its side conditions alone, then tests the claimed
/// relation for G(e,k+1) - G(e,k). Requires e >= 7 and 2 <= k < 2^{e-3}.
Minus1Check check_minus1(int e, Int k);

/// g(e,i) + g(e,j) < g(e+1,i+j+1) for i, j <= 2^{e-3}, i+j+1 <= 2^{e-2}.
bool check_nohyp(int e, Int i, Int j);

/// k in {2^{e-3}, 2^{e-4}, 2^{e-5}, 3*2^{e-5}, 2^{e-6}*a : a in {1,3,5,7}}.
bool in_doubling_equality_set(int e, Int k);

struct DoublingCheck {
    Int doubled = 0;  ///< G(e+1,2k)
    Int twice = 0;    ///< 2 G(e,k)
    bool in_equality_set = false;
    bool both_zero_on_equality = true;
    bool strict_splits_on_equality = true;

    bool inequality() const { return doubled <= twice; }
    bool equality() const { return doubled == twice; }
    bool holds() const
    {
        return inequality() && equality() == in_equality_set && both_zero_on_equality
            && strict_splits_on_equality;
    }
};

/// G(e+1,2k) <= 2G(e,k) with the equality characterization, 2 <= k <= 2^{e-3}.
DoublingCheck check_2k(int e, Int k);

struct GdSumResult {
    Int min_value = 0;
    /// Parts k_0..k_{t-1}; part i is weighted at level e+i.
    std::vector<Int> witness;
    /// Smallest t at which the minimum is reached.
    int attained_at = 0;
    int t_max = 0;
    bool stabilized = false;
};

/// Minimum of sum_i (8k_i - g(e+i,k_i)) over compositions of 2^{e-3}-1 into
/// at most t_max ordered non-negative parts. t_max <= 0 selects 2^{e-3}+4.
GdSumResult check_gdsum(int e, int t_max = 0);

/// sum_i (8k_i - g(e+i,k_i)).
Int composition_cost(int e, std::span<const Int> parts);

/// The six equality witnesses for compositions of 2^{e-3}-1.
std::vector<std::vector<Int>> gdsum_witnesses(int e);

/// 2-adic order of pi_{4i-1}(P_{4a+eps} ^ bo) for 1 <= eps <= 3 and
/// i in {a+1, a+2, a+3}. Throws std::domain_error elsewhere.
Int bo_homotopy_valuation(Int a, int eps, Int i);

VerificationReport check_128();

struct TableCell {
    int e;
    Int k;
    Int g;
};

/// Reference values of g(e,k) for e = 7 (k <= 16) and 8 <= e <= 14 (k <= 32).
std::span<const TableCell> table1_reference();

/// Property names accepted by sweep(), in `verify all` order.
const std::vector<std::string>& property_names();

/// Runs one named property over the given ranges (defaults per property).
/// Throws std::invalid_argument for an unknown name.
VerificationReport sweep(std::string_view property, const SweepRanges& ranges = {});

} // namespace hopfgd
