// One PASS/FAIL line per acceptance criterion, with wall-clock timings.
// Exit status is nonzero when any criterion fails.

#include "cli.hpp"

#include <hopfgd/gtable.hpp>
#include <hopfgd/immersion.hpp>
#include <hopfgd/sections.hpp>
#include <hopfgd/verify.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace hopfgd;

namespace {

// Time limits, in seconds.
constexpr double kTableLimit = 1.0;
constexpr double kSpropLimit = 30.0;
constexpr double kSectionsLimit = 5.0;
constexpr double kSuiteLimit = 60.0;
constexpr int kIndependenceTrials = 100;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string describe(const VerificationReport& r)
{
    return r.to_line();
}

Outcome table1()
{
    const auto r = sweep("table1");
    return {r.passed && r.checked == 240, describe(r)};
}

Outcome exceptional_value()
{
    const bool ok = gd_bound(7, 9) == 67 && gd_complement(7, 9) == 5 && complement_formula(7, 9) == 6;
    return {ok, "g(7,9)=" + std::to_string(gd_bound(7, 9)) + " G(7,9)="
                    + std::to_string(gd_complement(7, 9)) + " formula="
                    + std::to_string(complement_formula(7, 9))};
}

Outcome s_recurrence_and_superadditivity()
{
    const auto a = sweep("sprop");
    const auto b = sweep("spprop");
    return {a.passed && b.passed, describe(a) + " | " + describe(b)};
}

Outcome g_inequality()
{
    const auto r = sweep("gineq");
    const Int tight = check_gineq(12, 3, 32);
    return {r.passed && tight == 0, describe(r) + " | slack(12,3,32)=" + std::to_string(tight)};
}

Outcome minus1()
{
    const auto r = sweep("minus1");
    const auto point = check_minus1(24, 8);
    return {r.passed && point.tag == Minus1Case::Plus8 && point.holds,
            describe(r) + " | (24,8) difference=" + std::to_string(point.difference)};
}

Outcome nohyp_and_doubling()
{
    const auto a = sweep("nohyp");
    const auto b = sweep("2k");
    // Both inclusions of the equality set, computed without check_2k.
    bool sets_match = true;
    for (int e = 7; e <= 14; ++e) {
        const Int u = pow2(e - 6);
        const std::set<Int> listed = {8 * u, 4 * u, 2 * u, 6 * u, u, 3 * u, 5 * u, 7 * u};
        std::set<Int> observed;
        for (Int k = 2; k <= pow2(e - 3); ++k)
            if (gd_complement(e + 1, 2 * k) == 2 * gd_complement(e, k))
                observed.insert(k);
        std::set<Int> expected;
        for (Int k : listed)
            if (k >= 2)
                expected.insert(k);
        sets_match = sets_match && observed == expected;
    }
    return {a.passed && b.passed && sets_match,
            describe(a) + " | " + describe(b) + " | equality set " + (sets_match ? "matches" : "differs")};
}

Outcome composition_minimum()
{
    const auto r = sweep("gdsum");
    return {r.passed, describe(r)};
}

Outcome normal_bundle()
{
    bool ok = true;
    std::string detail;
    for (int e = 7; e <= 12; ++e) {
        const Int target = pow2(e) - e - 6;
        const Int bound = normal_gd_bound(e);
        const Int at_one = tower_bound(e, 1, pow2(e - 3) - 1);
        const auto report = immerse(pow2(e) - 1);
        const bool here = bound == target && at_one == target
            && report.lifting == pow2(e + 1) - e - 7;
        ok = ok && here;
        detail += "e=" + std::to_string(e) + ":" + std::to_string(bound) + (here ? " " : "! ");
    }
    return {ok, detail};
}

Outcome worked_sections()
{
    const FiltrationProfile m({11, 6, 4, 1, 0});
    const FiltrationProfile n({10, 8, 3, 2, 0});
    const SectionPlan plan = combine(m, n);
    std::ifstream golden(std::string(HOPFGD_GOLDEN_DIR) + "/sections_worked_example.txt");
    std::ostringstream expected;
    expected << golden.rdbuf();
    const bool p_ok = plan.p == std::vector<int>{21, 16, 14, 9, 7};
    const bool lists_ok = golden && serialize(plan) == expected.str();
    bool structure_ok = true;
    std::string failures;
    for (std::size_t j = 0; j < plan.rounds.size(); ++j) {
        structure_ok = structure_ok && check_structure(plan, j);
        for (std::size_t ell = 0; ell < m.size(); ++ell)
            for (std::size_t i = 0; i < n.size(); ++i) {
                if (ell + i < j || m[ell] + n[i] < plan.p[j])
                    continue;
                if (!check_independence_extended(plan, j, ell, i, kIndependenceTrials, 1))
                    failures += " (j,l,i)=(" + std::to_string(j) + "," + std::to_string(ell) + ","
                        + std::to_string(i) + ")";
            }
    }
    return {p_ok && lists_ok && structure_ok && failures.empty(),
            std::string("p ") + (p_ok ? "ok" : "bad") + ", lists " + (lists_ok ? "ok" : "bad")
                + ", structure " + (structure_ok ? "ok" : "bad") + ", dependent strata:"
                + (failures.empty() ? " none" : failures)};
}

Outcome starter_arithmetic()
{
    const auto r = check_128();
    return {r.passed, describe(r)};
}

Outcome comparisons()
{
    bool ok = true;
    std::string bad;
    for (int e = 7; e <= 20; ++e) {
        const auto r = immerse(pow2(e) - 1);
        bool here = r.best.has_value() && r.james_nonimm.has_value() && r.lifting && r.dm;
        if (here) {
            if (e <= 12)
                here = r.best_sources == std::vector<std::string>{"dm"};
            else if (e == 13)
                here = r.best_sources == std::vector<std::string>{"lifting", "dm"};
            else
                here = r.best_sources == std::vector<std::string>{"lifting"} && r.margin == 1
                    && *r.dm - *r.lifting == e - 13;
            for (const auto& v : {r.lifting, r.milgram, r.dm})
                here = here && (!v || *r.james_nonimm < *v);
        }
        if (!here)
            bad += " e=" + std::to_string(e);
        ok = ok && here;
    }
    return {ok, ok ? "e=7..20 consistent" : "mismatch at" + bad};
}

Outcome full_suite(double& seconds)
{
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run({"verify", "all"}, out, err);
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string failed;
    std::istringstream lines(out.str());
    for (std::string line; std::getline(lines, line);)
        if (line.find("\tFAIL\t") != std::string::npos)
            failed += " " + line.substr(0, line.find('\t'));
    return {code == 0 && seconds < kSuiteLimit,
            "exit=" + std::to_string(code) + (failed.empty() ? "" : ", failing:" + failed)};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    double suite_seconds = 0;
    const Criterion criteria[] = {
        {1, "table reproduction", kTableLimit, table1},
        {2, "exceptional value", 0, exceptional_value},
        {3, "S recurrence and S' superadditivity", kSpropLimit, s_recurrence_and_superadditivity},
        {4, "G inequality", 0, g_inequality},
        {5, "consecutive differences", 0, minus1},
        {6, "shifted sums and doubling", 0, nohyp_and_doubling},
        {7, "composition minimum", 0, composition_minimum},
        {8, "normal bundle bound", 0, normal_bundle},
        {9, "worked section example", kSectionsLimit, worked_sections},
        {10, "starter arithmetic", 0, starter_arithmetic},
        {11, "comparison with earlier immersions", 0, comparisons},
        {12, "full verification suite", kSuiteLimit, [&] { return full_suite(suite_seconds); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && s >= c.limit) {
            o.pass = false;
            o.detail += " | over time limit";
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2d %-38s %s  %7.3fs  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", s,
                    o.detail.c_str());
    }
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
