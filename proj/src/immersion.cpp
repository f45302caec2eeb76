#include <hopfgd/immersion.hpp>

#include <hopfgd/gtable.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfgd {

namespace {

// Exponent e with n = 2^e - 1, if any.
std::optional<int> mersenne_exponent(Int n)
{
    if (n < 1 || ((n + 1) & n) != 0)
        return std::nullopt;
    return static_cast<int>(nu(n + 1));
}

void require_tower_args(int e, Int ell)
{
    if (e < kMinLevel)
        throw std::domain_error("tower bound: requires e >= 7");
    if (ell < 0 || ell > pow2(e - 3) - 1)
        throw std::domain_error("tower bound: requires 0 <= ell <= 2^(e-3)-1");
}

} // namespace

std::vector<Int> tower_bounds(int e, int t_max, Int ell)
{
    require_tower_args(e, ell);
    if (t_max < 1)
        throw std::domain_error("tower bound: requires t >= 1");
    const auto width = static_cast<std::size_t>(ell + 1);
    std::vector<Int> row(width);
    for (std::size_t l = 0; l < width; ++l)
        row[l] = gd_bound(e, static_cast<Int>(l));
    std::vector<Int> out{row.back()};
    std::vector<Int> level(width);
    for (int t = 2; t <= t_max; ++t) {
        for (std::size_t l = 0; l < width; ++l)
            level[l] = gd_bound(e + t - 1, static_cast<Int>(l));
        std::vector<Int> next(width, 0);
        for (std::size_t l = 0; l < width; ++l)
            for (std::size_t i = 0; i <= l; ++i)
                next[l] = std::max(next[l], row[i] + level[l - i]);
        row = std::move(next);
        out.push_back(row.back());
    }
    return out;
}

Int tower_bound(int e, int t, Int ell)
{
    return tower_bounds(e, t, ell).back();
}

Int gd_sum_bound(std::span<const int> exponents, Int k)
{
    if (exponents.empty())
        throw std::domain_error("gd_sum_bound: no exponents");
    std::set<int> seen;
    for (int e : exponents) {
        if (e < kMinLevel)
            throw std::domain_error("gd_sum_bound: exponents must be >= 7");
        if (!seen.insert(e).second)
            throw std::domain_error("gd_sum_bound: exponents must be distinct");
    }
    if (k < 0)
        throw std::domain_error("gd_sum_bound: requires k >= 0");
    const auto width = static_cast<std::size_t>(k + 1);
    std::vector<Int> row(width);
    for (std::size_t l = 0; l < width; ++l)
        row[l] = gd_bound(exponents[0], static_cast<Int>(l));
    for (std::size_t p = 1; p < exponents.size(); ++p) {
        std::vector<Int> next(width, 0);
        for (std::size_t l = 0; l < width; ++l)
            for (std::size_t i = 0; i <= l; ++i)
                next[l] = std::max(next[l], row[i] + gd_bound(exponents[p], static_cast<Int>(l - i)));
        row = std::move(next);
    }
    return row.back();
}

Int normal_gd_bound(int e)
{
    if (e < kMinLevel || e > 13)
        throw std::domain_error("normal_gd_bound: requires 7 <= e <= 13");
    const Int top = pow2(e - 3);
    const auto values = tower_bounds(e, static_cast<int>(top), top - 1);
    const Int best = *std::max_element(values.begin(), values.end());
    if (values.size() >= 2 && values[values.size() - 2] != values.back())
        throw std::logic_error("normal_gd_bound: tower bound still growing at the cap");
    if (best > pow2(e) - e - 6)
        throw std::logic_error("normal_gd_bound: exceeds 2^e - e - 6 at e = " + std::to_string(e));
    return best;
}

BoundReport immerse(Int n)
{
    if (n < 1)
        throw std::domain_error("immerse: requires n >= 1");
    BoundReport r;
    r.n = n;
    const auto e = mersenne_exponent(n);
    if (e && *e >= kMinLevel)
        r.lifting = pow2(*e + 1) - *e - 7;
    if (n % 8 == 7) {
        r.milgram = 2 * n - alpha(n) - 4;
        const Int a = alpha(n);
        if (a >= 7)
            r.dm = 2 * n - (a == 7 ? 14 : a == 8 ? 16 : a == 9 ? 17 : 18);
    }
    if (e && *e >= 3) {
        static constexpr Int kDelta[4] = {3, 2, 2, 4};
        r.james_nonimm = pow2(*e + 1) - 2 * *e - kDelta[*e % 4];
    }

    const std::pair<const char*, const std::optional<Int>*> bounds[] = {
        {"lifting", &r.lifting}, {"milgram", &r.milgram}, {"dm", &r.dm}};
    for (const auto& [name, value] : bounds) {
        if (!*value)
            continue;
        if (!r.best || **value < *r.best) {
            r.best = **value;
            r.best_sources = {name};
        } else if (**value == *r.best) {
            r.best_sources.emplace_back(name);
        }
    }
    for (const auto& [name, value] : bounds)
        if (*value && **value > *r.best)
            r.margin = std::min(r.margin.value_or(**value - *r.best), **value - *r.best);
    if (r.best && r.best_sources.size() > 1)
        r.margin = 0;
    return r;
}

std::string BoundReport::to_text() const
{
    std::ostringstream out;
    auto line = [&](const char* source, const std::optional<Int>& v) {
        out << n << '\t' << source << '\t';
        if (v)
            out << *v;
        else
            out << '-';
        out << '\n';
    };
    line("lifting", lifting);
    line("milgram", milgram);
    line("dm", dm);
    line("james_nonimm", james_nonimm);
    out << "best\t";
    for (std::size_t i = 0; i < best_sources.size(); ++i)
        out << (i ? "," : "") << best_sources[i];
    if (best_sources.empty())
        out << '-';
    out << '\t';
    if (best)
        out << *best;
    else
        out << '-';
    out << '\n';
    if (margin)
        out << "margin\t" << *margin << '\n';
    return out.str();
}

} // namespace hopfgd
