#include <hopfgd/gtable.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopfgd {

namespace {

[[noreturn]] void domain_fail(const std::string& what)
{
    throw std::domain_error(what);
}

void require_level(int e, const char* fn)
{
    if (e < kMinLevel)
        domain_fail(std::string(fn) + ": level e must be >= 7, got " + std::to_string(e));
}

void require_argument(Int k, Int lo, const char* fn)
{
    if (k < lo || k > kMaxArgument)
        domain_fail(std::string(fn) + ": argument out of range: " + std::to_string(k));
}

void require_not_one_mod_8(Int k, const char* fn)
{
    if (k % 8 == 1)
        domain_fail(std::string(fn) + ": undefined for k = 1 mod 8, got " + std::to_string(k));
}

// 2^{e-3}, saturated at kMaxArgument for large e.
Int top_index(int e)
{
    return (e - 3 >= 59) ? kMaxArgument : (Int{1} << (e - 3));
}

// Smallest admissible low-order head of `rest`, if any.
std::optional<Int> first_split(Int rest)
{
    const auto u = static_cast<std::uint64_t>(rest);
    for (int p = 1; p < 63; ++p) {
        if (((u >> (p - 1)) & 1u) == 0)
            continue;
        const Int head = static_cast<Int>(u & ((std::uint64_t{1} << p) - 1));
        if (head == rest)
            break;
        if (head < 2 || head % 8 == 1)
            continue;
        if (nu(rest - head) > split_threshold(head))
            return head;
    }
    return std::nullopt;
}

class ComplementMemo {
public:
    static constexpr int kMaxLevel = 20;
    static constexpr Int kMaxK = Int{1} << 14;

    ComplementMemo()
    {
        rows_.resize(kMaxLevel - kMinLevel + 1);
        for (int e = kMinLevel; e <= kMaxLevel; ++e) {
            auto& row = rows_[e - kMinLevel];
            const Int top = std::min(top_index(e), kMaxK);
            row.resize(static_cast<std::size_t>(top + 1), 0);
            for (Int k = 2; k <= top; ++k)
                row[static_cast<std::size_t>(k)] = compute(e, k);
        }
    }

    static const ComplementMemo& instance()
    {
        static const ComplementMemo memo;
        return memo;
    }

    std::optional<Int> find(int e, Int k) const
    {
        if (e > kMaxLevel)
            return std::nullopt;
        const auto& row = rows_[e - kMinLevel];
        if (k >= static_cast<Int>(row.size()))
            return std::nullopt;
        return row[static_cast<std::size_t>(k)];
    }

    static Int compute(int e, Int k)
    {
        if (e == 7 && k == 9)
            return 5;
        return complement_formula(e, k);
    }

private:
    std::vector<std::vector<Int>> rows_;
};

} // namespace

Int stable_complement(Int k)
{
    require_argument(k, 1, "stable_complement");
    if (k == 1)
        return 8;
    Int value = 8 * k - 13 * ((k + 1) / 2) + 2 * alpha(k) + 2 * std::min<Int>(3, nu(k - 1));
    if (k % 2 == 0)
        value -= 1;
    else if (k % 8 == 1 && alpha(k) != 2)
        value += 2;
    else
        value += 4;
    return value;
}

Int additive_length(Int k)
{
    require_argument(k, 2, "additive_length");
    require_not_one_mod_8(k, "additive_length");
    return alpha(k) - (k % 4 == 3 ? 2 : 1);
}

Int reduced_stable_complement(Int k)
{
    return stable_complement(k) - additive_length(k);
}

Int split_threshold(Int k)
{
    return stable_complement(k) + nu_prime(k) - additive_length(k);
}

Int Decomposition::total() const
{
    return std::accumulate(parts.begin(), parts.end(), Int{0});
}

Decomposition decompose(Int k)
{
    require_argument(k, 2, "decompose");
    require_not_one_mod_8(k, "decompose");
    Decomposition d;
    Int rest = k;
    while (auto head = first_split(rest)) {
        d.parts.push_back(*head);
        rest -= *head;
    }
    d.parts.push_back(rest);
    return d;
}

Int deviation(int e, Int k)
{
    require_level(e, "deviation");
    const Decomposition d = decompose(k);
    Int sum = 0;
    for (std::size_t i = 1; i < d.parts.size(); ++i)
        sum += pos_part(std::min<Int>(nu(d.parts[i]), e - 6) - split_threshold(d.parts[i - 1]));
    return sum;
}

Int basic_complement(int e, Int k)
{
    return pos_part(e - 6 - nu_prime(k)) - deviation(e, k);
}

bool complement_defined(int e, Int k)
{
    return e >= kMinLevel && k >= 2 && k <= top_index(e);
}

Int complement_formula(int e, Int k)
{
    if (!complement_defined(e, k))
        domain_fail("G(" + std::to_string(e) + "," + std::to_string(k)
                    + ") is undefined: requires e >= 7 and 2 <= k <= 2^(e-3)");
    if (k % 8 != 1)
        return std::min(stable_complement(k), basic_complement(e, k));
    return std::min(stable_complement(k), 6 + basic_complement(e, k - 1));
}

Int gd_complement(int e, Int k)
{
    if (!complement_defined(e, k))
        domain_fail("G(" + std::to_string(e) + "," + std::to_string(k)
                    + ") is undefined: requires e >= 7 and 2 <= k <= 2^(e-3)");
    if (auto hit = ComplementMemo::instance().find(e, k))
        return *hit;
    return ComplementMemo::compute(e, k);
}

Int extended_complement(int e, Int k)
{
    require_level(e, "extended_complement");
    if (k < 0 || k > top_index(e))
        domain_fail("extended_complement: k out of range " + std::to_string(k));
    if (k <= 1)
        return 8 * k;
    return gd_complement(e, k);
}

Int gd_bound(int e, Int k)
{
    require_level(e, "gd_bound");
    if (k < 0)
        domain_fail("gd_bound: negative k");
    if (k <= 1)
        return 0;
    if (k > top_index(e)) {
        if (e > 62)
            domain_fail("gd_bound: 2^e overflows for e = " + std::to_string(e));
        return Int{1} << e;
    }
    return 8 * k - gd_complement(e, k);
}

GTableEntry table_entry(int e, Int k)
{
    GTableEntry entry;
    entry.e = e;
    entry.k = k;
    entry.g_value = gd_bound(e, k);
    if (complement_defined(e, k))
        entry.G_value = gd_complement(e, k);
    return entry;
}

Int starter_bound(Int k)
{
    if (k < 0 || k > 16)
        domain_fail("starter_bound: requires 0 <= k <= 16, got " + std::to_string(k));
    if (k <= 1)
        return 0;
    if (k == 2)
        return 16;
    if (k % 2 == 1)
        return 8 * k - 5;
    return 8 * k + nu(k) - 4;
}

Int starter_bound_hp(Int k)
{
    return k == 2 ? 13 : starter_bound(k);
}

Int product_bound(int e, Int k)
{
    if (e < kMinLevel + 1)
        domain_fail("product_bound: requires e >= 8");
    if (k < 0 || k > top_index(e))
        domain_fail("product_bound: requires 0 <= k <= 2^(e-3)");
    const Int lo = std::max<Int>(0, k - top_index(e - 1));
    Int best = -1;
    for (Int i = lo; i <= k / 2; ++i)
        best = std::max(best, gd_bound(e - 1, i) + gd_bound(e - 1, k - i));
    return best;
}

} // namespace hopfgd
