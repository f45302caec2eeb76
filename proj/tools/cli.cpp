#include "cli.hpp"

#include <hopfgd/gtable.hpp>
#include <hopfgd/immersion.hpp>
#include <hopfgd/sections.hpp>
#include <hopfgd/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfgd::cli {

namespace {

constexpr int kUsageError = 2;
constexpr int kFailed = 1;

std::vector<int> parse_counts(const std::string& text)
{
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad count list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty count list");
    return out;
}

std::string join(const std::vector<int>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + std::to_string(values[i]);
    return s;
}

int cmd_gfun(int e, Int k, std::ostream& out)
{
    const GTableEntry entry = table_entry(e, k);
    out << "g=" << entry.g_value;
    if (entry.G_value)
        out << " G=" << *entry.G_value;
    out << '\n';
    return 0;
}

int cmd_table(const IntRange& es, const IntRange& ks, std::ostream& out)
{
    out << 'k';
    for (Int e = es.lo; e <= es.hi; ++e)
        out << "\te=" << e;
    out << '\n';
    for (Int k = ks.lo; k <= ks.hi; ++k) {
        out << k;
        for (Int e = es.lo; e <= es.hi; ++e) {
            const int level = static_cast<int>(e);
            out << '\t';
            if (level < kMinLevel)
                throw std::domain_error("table: levels start at 7");
            if (k > pow2(level - 3))
                out << '-';
            else
                out << gd_bound(level, k);
        }
        out << '\n';
    }
    return 0;
}

int cmd_decompose(Int k, std::ostream& out)
{
    const Decomposition d = decompose(k);
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        out << (i ? "+" : "") << d.parts[i];
    out << '\n';
    return 0;
}

int cmd_verify(const std::string& property, const SweepRanges& ranges, std::ostream& out,
               std::ostream& err)
{
    std::vector<std::string> names;
    if (property == "all")
        names = property_names();
    else
        names = {property};
    bool all_passed = true;
    for (const auto& name : names) {
        const VerificationReport report = sweep(name, ranges);
        out << report.to_line() << '\n';
        for (const auto& note : report.notes)
            err << name << ": " << note << '\n';
        all_passed = all_passed && report.passed;
    }
    return all_passed ? 0 : kFailed;
}

int cmd_sections(const std::string& m_text, const std::string& n_text, bool check, int trials,
                 std::uint64_t seed, std::ostream& out)
{
    const FiltrationProfile m(parse_counts(m_text));
    const FiltrationProfile n(parse_counts(n_text));
    const SectionPlan plan = combine(m, n);
    out << "p=" << join(plan.p) << '\n' << serialize(plan);
    if (!check)
        return 0;
    bool ok = true;
    for (std::size_t j = 0; j < plan.rounds.size(); ++j) {
        const bool structure = check_structure(plan, j);
        std::string failing;
        for (std::size_t ell = 0; ell < m.size(); ++ell)
            for (std::size_t i = 0; i < n.size(); ++i)
                if (ell + i >= j && m[ell] + n[i] >= plan.p[j]
                    && !check_independence_extended(plan, j, ell, i, trials, seed))
                    failing += (failing.empty() ? "" : ",") + std::to_string(ell) + "x"
                        + std::to_string(i);
        const bool independent = failing.empty();
        out << "check\tround=" << j << "\tstructure=" << (structure ? "PASS" : "FAIL")
            << "\tindependence=" << (independent ? "PASS" : "FAIL");
        if (!independent)
            out << "\tstrata=" << failing;
        out << '\n';
        ok = ok && structure && independent;
    }
    return ok ? 0 : kFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Geometric-dimension bounds for multiples of the Hopf bundle"};
    app.require_subcommand(1);

    int g_e = 0;
    Int g_k = 0;
    auto* gfun = app.add_subcommand("gfun", "print g(e,k) and, when defined, G(e,k)");
    gfun->add_option("e", g_e)->required();
    gfun->add_option("k", g_k)->required();

    std::string t_e = "7..14";
    std::string t_k = "1..32";
    auto* table = app.add_subcommand("table", "print the grid of g(e,k)");
    table->add_option("--e", t_e, "level range a..b");
    table->add_option("--k", t_k, "argument range a..b");

    Int d_k = 0;
    auto* dec = app.add_subcommand("decompose", "print the maximal decomposition of k");
    dec->add_option("k", d_k)->required();

    std::string v_property;
    std::string v_e;
    std::string v_k;
    auto* ver = app.add_subcommand("verify", "run a verification sweep");
    ver->add_option("property", v_property, "property name or 'all'")->required();
    ver->add_option("--e", v_e, "level range a..b");
    ver->add_option("--k", v_k, "argument range a..b");

    std::string s_m;
    std::string s_n;
    bool s_check = false;
    int s_trials = 100;
    std::uint64_t s_seed = 1;
    auto* sec = app.add_subcommand("sections", "combine two filtered section families");
    sec->add_option("--m", s_m, "counts m_0,...,m_k")->required();
    sec->add_option("--n", s_n, "counts n_0,...,n_k")->required();
    sec->add_flag("--check", s_check, "run structure and independence checks");
    sec->add_option("--trials", s_trials, "random trials per stratum")->check(CLI::PositiveNumber);
    sec->add_option("--seed", s_seed, "seed for the random trials");

    Int i_n = 0;
    auto* imm = app.add_subcommand("immerse", "print immersion bounds for RP^n");
    imm->add_option("n", i_n)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return e.get_exit_code() == 0 ? 0 : kUsageError;
    }

    try {
        if (*gfun)
            return cmd_gfun(g_e, g_k, out);
        if (*table)
            return cmd_table(parse_range(t_e), parse_range(t_k), out);
        if (*dec)
            return cmd_decompose(d_k, out);
        if (*ver) {
            SweepRanges ranges;
            if (!v_e.empty())
                ranges.e = parse_range(v_e);
            if (!v_k.empty())
                ranges.k = parse_range(v_k);
            return cmd_verify(v_property, ranges, out, err);
        }
        if (*sec)
            return cmd_sections(s_m, s_n, s_check, s_trials, s_seed, out);
        if (*imm) {
            out << immerse(i_n).to_text();
            return 0;
        }
    } catch (const std::logic_error& e) {
        // domain_error and invalid_argument both land here.
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace hopfgd::cli
