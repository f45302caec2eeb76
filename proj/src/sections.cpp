#include <hopfgd/sections.hpp>

#include <hopfgd/exact_rank.hpp>

#include <algorithm>
#include <istream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hopfgd {

namespace {

std::size_t as_size(int v) { return static_cast<std::size_t>(v); }

void require_same_length(const FiltrationProfile& m, const FiltrationProfile& n)
{
    if (m.size() != n.size())
        throw std::invalid_argument("filtration profiles must have equal length");
}

// Algorithm run in the orientation where big.top() >= small.top(); the r
// family belongs to `big`.
std::vector<std::vector<SectionExpr>> combine_oriented(const FiltrationProfile& big,
                                                       const FiltrationProfile& small,
                                                       const std::vector<int>& p)
{
    const int m0 = big.top();
    const int n0 = small.top();
    const auto m0s = as_size(m0);
    const auto n0s = as_size(n0);

    std::vector<std::vector<SectionExpr>> rounds;
    std::vector<std::optional<SectionExpr>> prev_r, prev_s;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const int pj = p[j];
        std::vector<std::optional<SectionExpr>> cur_r(m0s + 1), cur_s(n0s + 1);
        for (int i = 1; i <= pj - n0; ++i)
            cur_r[as_size(i)] = SectionExpr::unit_r(m0s, n0s, as_size(i));
        for (int i = 1; i <= pj - m0; ++i)
            cur_s[as_size(i)] = SectionExpr::unit_s(m0s, n0s, as_size(i));
        for (int i = std::max(1, pj - n0 + 1); i <= std::min(m0, pj); ++i) {
            const auto si = as_size(pj + 1 - i);
            if (!prev_r.at(as_size(i)) || !prev_s.at(si))
                throw std::logic_error("combine: previous round lacks a required section");
            const SectionExpr sum = *prev_r[as_size(i)] + *prev_s[si];
            cur_r[as_size(i)] = sum;
            cur_s[si] = sum;
        }

        std::vector<SectionExpr> rows;
        rows.reserve(as_size(pj));
        for (int i = 1; i <= std::min(m0, pj); ++i)
            rows.push_back(*cur_r[as_size(i)]);
        for (int i = pj - m0; i >= 1; --i)
            rows.push_back(*cur_s[as_size(i)]);
        rounds.push_back(std::move(rows));
        prev_r = std::move(cur_r);
        prev_s = std::move(cur_s);
    }
    return rounds;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Values of the r's (or s's) at a point where the first `independent` of
// `count` sections are the standard basis of Z^independent.
std::vector<std::vector<Int>> stratum_values(std::size_t count, std::size_t independent,
                                             int trial, std::mt19937_64& gen)
{
    std::vector<std::vector<Int>> values(count, std::vector<Int>(independent, 0));
    for (std::size_t q = 0; q < count; ++q) {
        if (q < independent) {
            values[q][q] = 1;
            continue;
        }
        if (independent == 0 || trial == 0)
            continue;
        if (trial == 1) {
            values[q][(q - independent) % independent] = -1;
            continue;
        }
        for (auto& v : values[q])
            v = static_cast<Int>(gen() % 19) - 9;
    }
    return values;
}

IntMatrix flats(const std::vector<SectionExpr>& sections)
{
    IntMatrix rows;
    rows.reserve(sections.size());
    for (const auto& s : sections)
        rows.push_back(s.flat());
    return rows;
}

void require_round(const SectionPlan& plan, std::size_t j)
{
    if (j >= plan.rounds.size() || j >= plan.p.size())
        throw std::invalid_argument("round index out of range");
}

} // namespace

FiltrationProfile::FiltrationProfile(std::vector<int> counts) : counts_(std::move(counts))
{
    if (counts_.empty())
        throw std::invalid_argument("filtration profile must be non-empty");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0)
            throw std::invalid_argument("filtration counts must be non-negative");
        if (i > 0 && counts_[i] > counts_[i - 1])
            throw std::invalid_argument("filtration counts must be non-increasing");
    }
}

SectionExpr SectionExpr::unit_r(std::size_t m0, std::size_t n0, std::size_t index)
{
    SectionExpr e{std::vector<Int>(m0, 0), std::vector<Int>(n0, 0)};
    e.r_coeffs.at(index - 1) = 1;
    return e;
}

SectionExpr SectionExpr::unit_s(std::size_t m0, std::size_t n0, std::size_t index)
{
    SectionExpr e{std::vector<Int>(m0, 0), std::vector<Int>(n0, 0)};
    e.s_coeffs.at(index - 1) = 1;
    return e;
}

SectionExpr& SectionExpr::operator+=(const SectionExpr& other)
{
    if (other.r_coeffs.size() != r_coeffs.size() || other.s_coeffs.size() != s_coeffs.size())
        throw std::invalid_argument("SectionExpr: basis size mismatch");
    for (std::size_t i = 0; i < r_coeffs.size(); ++i)
        r_coeffs[i] += other.r_coeffs[i];
    for (std::size_t i = 0; i < s_coeffs.size(); ++i)
        s_coeffs[i] += other.s_coeffs[i];
    return *this;
}

std::vector<Int> SectionExpr::flat() const
{
    std::vector<Int> out(r_coeffs);
    out.insert(out.end(), s_coeffs.begin(), s_coeffs.end());
    return out;
}

std::vector<int> p_vector(const FiltrationProfile& m, const FiltrationProfile& n)
{
    require_same_length(m, n);
    std::vector<int> p(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
        int best = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i <= j; ++i)
            best = std::min(best, m[i] + n[j - i]);
        p[j] = best;
    }
    return p;
}

SectionPlan combine(const FiltrationProfile& m, const FiltrationProfile& n)
{
    SectionPlan plan;
    plan.m = m;
    plan.n = n;
    plan.p = p_vector(m, n);
    plan.roles_swapped = m.top() < n.top();
    if (!plan.roles_swapped) {
        plan.rounds = combine_oriented(m, n, plan.p);
        return plan;
    }
    plan.rounds = combine_oriented(n, m, plan.p);
    for (auto& round : plan.rounds)
        for (auto& expr : round)
            expr = expr.swapped_roles();
    return plan;
}

bool check_structure(const SectionPlan& plan, std::size_t j)
{
    require_round(plan, j);
    const FiltrationProfile& big = plan.roles_swapped ? plan.n : plan.m;
    const FiltrationProfile& small = plan.roles_swapped ? plan.m : plan.n;
    const int m0 = big.top();
    const int n0 = small.top();
    const int pj = plan.p[j];
    const auto& round = plan.rounds[j];
    if (round.size() != as_size(pj))
        throw std::invalid_argument("check_structure: round size differs from p_j");

    std::vector<SectionExpr> rows;
    rows.reserve(round.size());
    for (const auto& expr : round) {
        rows.push_back(plan.roles_swapped ? expr.swapped_roles() : expr);
        if (rows.back().r_coeffs.size() != as_size(m0) || rows.back().s_coeffs.size() != as_size(n0))
            throw std::invalid_argument("check_structure: section has wrong basis size");
    }

    auto r_at = [&](int row, int index) { return rows[as_size(row - 1)].r_coeffs[as_size(index - 1)]; };
    auto s_at = [&](int row, int index) { return rows[as_size(row - 1)].s_coeffs[as_size(index - 1)]; };

    // From the upper left: 1 at column r_i, zeros left of it.
    const int upper = std::min(m0, pj);
    for (int i = 1; i <= pj; ++i) {
        if (i <= upper) {
            if (r_at(i, i) != 1)
                return false;
            for (int c = 1; c < i; ++c)
                if (r_at(i, c) != 0)
                    return false;
        } else {
            for (int c = 1; c <= m0; ++c)
                if (r_at(i, c) != 0)
                    return false;
        }
    }

    // From the lower right: row p_j + 1 - t has 1 at s_t and no s_{<t}.
    const int lower = std::min(n0, pj);
    for (int t = 1; t <= pj; ++t) {
        const int row = pj + 1 - t;
        if (t <= lower) {
            if (s_at(row, t) != 1)
                return false;
            for (int c = 1; c < t; ++c)
                if (s_at(row, c) != 0)
                    return false;
        } else {
            for (int c = 1; c <= n0; ++c)
                if (s_at(row, c) != 0)
                    return false;
        }
    }

    // Combined rows: r_i + (higher r) + s_{p_j+1-i} + (higher s).
    for (int i = std::max(1, pj - n0 + 1); i <= upper; ++i) {
        const int t = pj + 1 - i;
        if (r_at(i, i) != 1 || s_at(i, t) != 1)
            return false;
        for (int c = 1; c < i; ++c)
            if (r_at(i, c) != 0)
                return false;
        for (int c = 1; c < t; ++c)
            if (s_at(i, c) != 0)
                return false;
    }
    return true;
}

bool independent_on_stratum(const std::vector<SectionExpr>& sections,
                            const FiltrationProfile& m, const FiltrationProfile& n,
                            std::size_t ell, std::size_t i, int trials, std::uint64_t seed)
{
    require_same_length(m, n);
    if (ell >= m.size() || i >= n.size())
        throw std::invalid_argument("stratum index out of range");
    if (trials <= 0)
        throw std::invalid_argument("trials must be positive");

    const auto m0 = as_size(m.top());
    const auto n0 = as_size(n.top());
    const auto a = as_size(m[ell]);
    const auto b = as_size(n[i]);
    for (const auto& s : sections)
        if (s.r_coeffs.size() != m0 || s.s_coeffs.size() != n0)
            throw std::invalid_argument("section has wrong basis size");
    if (sections.size() > a + b)
        return false;

    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 gen(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
        const auto rvals = stratum_values(m0, a, trial, gen);
        const auto svals = stratum_values(n0, b, trial, gen);

        IntMatrix evaluated;
        evaluated.reserve(sections.size());
        for (const auto& s : sections) {
            std::vector<Int> v(a + b, 0);
            for (std::size_t q = 0; q < m0; ++q)
                if (const Int c = s.r_coeffs[q])
                    for (std::size_t d = 0; d < a; ++d)
                        v[d] += c * rvals[q][d];
            for (std::size_t q = 0; q < n0; ++q)
                if (const Int c = s.s_coeffs[q])
                    for (std::size_t d = 0; d < b; ++d)
                        v[a + d] += c * svals[q][d];
            evaluated.push_back(std::move(v));
        }
        if (exact_rank(evaluated) != sections.size())
            return false;
    }
    return true;
}

bool check_independence(const SectionPlan& plan, std::size_t j, std::size_t ell, int trials,
                        std::uint64_t seed)
{
    require_round(plan, j);
    if (ell > j)
        throw std::invalid_argument("check_independence: requires ell <= j");
    return independent_on_stratum(plan.rounds[j], plan.m, plan.n, ell, j - ell, trials, seed);
}

bool check_independence_extended(const SectionPlan& plan, std::size_t j, std::size_t ell,
                                 std::size_t i, int trials, std::uint64_t seed)
{
    require_round(plan, j);
    return independent_on_stratum(plan.rounds[j], plan.m, plan.n, ell, i, trials, seed);
}

SectionPlan flag_extend(const SectionPlan& plan)
{
    if (plan.rounds.empty() || plan.rounds.size() != plan.p.size())
        throw std::invalid_argument("flag_extend: malformed plan");
    SectionPlan out = plan;
    const std::size_t last = plan.rounds.size() - 1;
    std::vector<SectionExpr> level = plan.rounds[last];
    if (exact_rank(flats(level)) != level.size())
        throw std::logic_error("flag_extend: last round is not independent");
    out.rounds[last] = level;

    for (std::size_t j = last; j-- > 0;) {
        const auto target = as_size(plan.p[j]);
        std::size_t rank = level.size();
        for (const auto& candidate : plan.rounds[j]) {
            if (level.size() == target)
                break;
            level.push_back(candidate);
            const std::size_t r = exact_rank(flats(level));
            if (r > rank)
                rank = r;
            else
                level.pop_back();
        }
        if (level.size() != target)
            throw std::logic_error("flag_extend: cannot complete level " + std::to_string(j));
        out.rounds[j] = level;
    }
    return out;
}

std::string serialize(const SectionPlan& plan)
{
    std::ostringstream out;
    auto list = [&out](const std::vector<Int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? "," : "") << v[i];
    };
    for (std::size_t j = 0; j < plan.rounds.size(); ++j) {
        for (std::size_t i = 0; i < plan.rounds[j].size(); ++i) {
            const auto& expr = plan.rounds[j][i];
            out << "round=" << j << " idx=" << (i + 1) << " r=";
            list(expr.r_coeffs);
            out << " s=";
            list(expr.s_coeffs);
            out << '\n';
        }
    }
    return out.str();
}

std::vector<SerializedSection> parse_sections(std::istream& in)
{
    auto parse_list = [](const std::string& text) {
        std::vector<Int> values;
        if (text.empty())
            return values;
        std::istringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            values.push_back(std::stoll(item));
        return values;
    };
    auto field = [](const std::string& token, const std::string& key) {
        if (token.rfind(key + "=", 0) != 0)
            throw std::invalid_argument("parse_sections: expected field '" + key + "' in '"
                                        + token + "'");
        return token.substr(key.size() + 1);
    };

    std::vector<SerializedSection> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string round, idx, r, s, extra;
        if (!(ls >> round >> idx >> r >> s) || (ls >> extra))
            throw std::invalid_argument("parse_sections: malformed line '" + line + "'");
        try {
            SerializedSection entry;
            entry.round = std::stoul(field(round, "round"));
            entry.idx = std::stoul(field(idx, "idx"));
            entry.expr.r_coeffs = parse_list(field(r, "r"));
            entry.expr.s_coeffs = parse_list(field(s, "s"));
            out.push_back(std::move(entry));
        } catch (const std::logic_error& e) {
            throw std::invalid_argument("parse_sections: malformed line '" + line + "'");
        }
    }
    return out;
}

} // namespace hopfgd
