#pragma once

// Constant-coefficient combination of filtered section families.
//
// Given sections r_1..r_{m_0} of theta over X_k whose first m_i are linearly
// independent on X_i, and likewise s_1..s_{n_0} of eta over Y_k, round j of
// the plan lists p_j = min(m_i + n_{j-i}) combinations that stay independent
// on W_j = union of X_i x Y_{j-i}.

#include <hopfgd/numtheory.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hopfgd {

/// Non-increasing independence counts (m_0, ..., m_k).
class FiltrationProfile {
public:
    FiltrationProfile() = default;
    explicit FiltrationProfile(std::vector<int> counts);

    const std::vector<int>& counts() const { return counts_; }
    int operator[](std::size_t i) const { return counts_.at(i); }
    std::size_t size() const { return counts_.size(); }
    /// Filtration length k (number of stages minus one).
    std::size_t length() const { return counts_.size() - 1; }
    int top() const { return counts_.front(); }

    friend bool operator==(const FiltrationProfile&, const FiltrationProfile&) = default;

private:
    std::vector<int> counts_;
};

/// Integer combination sum r_coeffs[i] r_{i+1} + sum s_coeffs[i] s_{i+1}.
struct SectionExpr {
    std::vector<Int> r_coeffs;
    std::vector<Int> s_coeffs;

    static SectionExpr unit_r(std::size_t m0, std::size_t n0, std::size_t index);
    static SectionExpr unit_s(std::size_t m0, std::size_t n0, std::size_t index);

    SectionExpr& operator+=(const SectionExpr& other);
    friend SectionExpr operator+(SectionExpr a, const SectionExpr& b) { return a += b; }
    friend bool operator==(const SectionExpr&, const SectionExpr&) = default;
    friend auto operator<=>(const SectionExpr&, const SectionExpr&) = default;

    /// Coefficients concatenated as (r_1..r_{m0}, s_1..s_{n0}).
    std::vector<Int> flat() const;
    SectionExpr swapped_roles() const { return {s_coeffs, r_coeffs}; }
};

/// All rounds of the combination algorithm, labelled in the caller's r/s
/// orientation. Rows within a round follow the order
///   r_1^{(j)}, ..., r_{min(m0,p_j)}^{(j)}, s_{p_j-m0}^{(j)}, ..., s_1^{(j)}
/// of the orientation with the larger top count.
struct SectionPlan {
    FiltrationProfile m;
    FiltrationProfile n;
    std::vector<int> p;
    std::vector<std::vector<SectionExpr>> rounds;
    /// True when m_0 < n_0, so the row order above is taken with r and s
    /// exchanged.
    bool roles_swapped = false;
};

/// p_j = min(m_i + n_{j-i} : 0 <= i <= j).
std::vector<int> p_vector(const FiltrationProfile& m, const FiltrationProfile& n);

SectionPlan combine(const FiltrationProfile& m, const FiltrationProfile& n);

/// Verifies the unit-triangular shape of round j from both corners.
bool check_structure(const SectionPlan& plan, std::size_t j);

/// Rank check of the first sections.size() sections on X_ell x Y_i, with the
/// remaining r's and s's set adversarially. Trials 0 and 1 use zero and
/// negated unit values; later trials draw entries from [-9, 9].
bool independent_on_stratum(const std::vector<SectionExpr>& sections,
                            const FiltrationProfile& m, const FiltrationProfile& n,
                            std::size_t ell, std::size_t i, int trials, std::uint64_t seed);

/// Round j on the stratum X_ell x Y_{j-ell}.
bool check_independence(const SectionPlan& plan, std::size_t j, std::size_t ell, int trials,
                        std::uint64_t seed);

/// Round j on X_ell x Y_i; meaningful when ell + i >= j and
/// m_ell + n_i >= p_j.
bool check_independence_extended(const SectionPlan& plan, std::size_t j, std::size_t ell,
                                 std::size_t i, int trials, std::uint64_t seed);

/// Nested family: rounds[j] of the result holds p_j sections, rounds[j]
/// starts with rounds[j+1], and additions come from round j of `plan` in row
/// order. Throws std::logic_error if a level cannot be completed.
SectionPlan flag_extend(const SectionPlan& plan);

/// One line per section: `round=<j> idx=<i> r=<c,...> s=<c,...>`, idx 1-based.
std::string serialize(const SectionPlan& plan);

struct SerializedSection {
    std::size_t round = 0;
    std::size_t idx = 0;
    SectionExpr expr;

    friend bool operator==(const SerializedSection&, const SerializedSection&) = default;
};

/// Inverse of serialize; throws std::invalid_argument on malformed input.
std::vector<SerializedSection> parse_sections(std::istream& in);

} // namespace hopfgd
