#include <hopfgd/gtable.hpp>
#include <hopfgd/immersion.hpp>
#include <hopfgd/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using namespace hopfgd;

TEST_CASE("tower bound")
{
    CHECK(tower_bound(7, 1, 15) == 115);
    for (int t = 1; t <= 20; ++t) {
        CHECK(tower_bound(7, t, 15) <= 115);
        CHECK(tower_bound(7, t, 0) == 0);
    }
    CHECK_THROWS_AS(tower_bound(6, 1, 3), std::domain_error);
    CHECK_THROWS_AS(tower_bound(7, 0, 3), std::domain_error);
    CHECK_THROWS_AS(tower_bound(7, 1, 16), std::domain_error);
}

TEST_CASE("tower bound is monotone and stabilizes")
{
    for (int e = 7; e <= 10; ++e) {
        const Int top = pow2(e - 3) - 1;
        std::vector<std::vector<Int>> by_ell;
        for (Int ell = 0; ell <= top; ++ell)
            by_ell.push_back(tower_bounds(e, static_cast<int>(ell) + 3, ell));
        for (Int ell = 0; ell <= top; ++ell) {
            const auto& row = by_ell[static_cast<std::size_t>(ell)];
            for (std::size_t t = 1; t < row.size(); ++t)
                REQUIRE(row[t] >= row[t - 1]);
            // Stable from t = ell + 1 on.
            REQUIRE(row.back() == row[static_cast<std::size_t>(ell)]);
            if (ell > 0)
                for (std::size_t t = 0; t <= static_cast<std::size_t>(ell); ++t)
                    REQUIRE(row[t] >= by_ell[static_cast<std::size_t>(ell) - 1][t]);
        }
    }
}

TEST_CASE("sum bound over distinct exponents")
{
    for (Int k = 0; k <= 40; ++k) {
        const std::vector<int> single = {7};
        CHECK(gd_sum_bound(single, k) == gd_bound(7, k));
    }
    Int brute = 0;
    for (Int i = 0; i <= 15; ++i)
        brute = std::max(brute, gd_bound(7, i) + gd_bound(8, 15 - i));
    const std::vector<int> pair = {7, 8};
    CHECK(gd_sum_bound(pair, 15) == brute);
    for (int t = 1; t <= 6; ++t) {
        std::vector<int> exps;
        for (int i = 0; i < t; ++i)
            exps.push_back(7 + i);
        CHECK(gd_sum_bound(exps, 15) == tower_bound(7, t, 15));
    }
    const std::vector<int> low = {6, 8};
    const std::vector<int> dup = {8, 8};
    CHECK_THROWS_AS(gd_sum_bound(low, 3), std::domain_error);
    CHECK_THROWS_AS(gd_sum_bound(dup, 3), std::domain_error);
}

TEST_CASE("normal bundle bound")
{
    CHECK(normal_gd_bound(7) == 115);
    CHECK(normal_gd_bound(8) == 242);
    CHECK(normal_gd_bound(9) == 497);
    for (int e = 7; e <= 11; ++e) {
        CHECK(normal_gd_bound(e) == pow2(e) - e - 6);
        CHECK(normal_gd_bound(e) == 8 * (pow2(e - 3) - 1) - check_gdsum(e).min_value);
    }
    CHECK_THROWS_AS(normal_gd_bound(6), std::domain_error);
}

TEST_CASE("immersion reports")
{
    const auto r14 = immerse(16383);
    CHECK(r14.lifting == pow2(15) - 21);
    CHECK(r14.dm == pow2(15) - 20);
    CHECK(r14.best == r14.lifting);
    CHECK(r14.best_sources == std::vector<std::string>{"lifting"});
    CHECK(r14.margin == 1);

    const auto r13 = immerse(8191);
    CHECK(r13.lifting == r13.dm);
    CHECK(r13.best_sources == std::vector<std::string>{"lifting", "dm"});
    CHECK(r13.margin == 0);

    const auto r7 = immerse(127);
    CHECK(r7.dm == 240);
    CHECK(r7.lifting == 242);
    CHECK(r7.best_sources == std::vector<std::string>{"dm"});

    const auto r15 = immerse(15);
    CHECK_FALSE(r15.lifting);
    CHECK(r15.milgram == 30 - 4 - 4);
    CHECK_FALSE(r15.dm);

    const auto even = immerse(10);
    CHECK_FALSE(even.best);
    CHECK(even.to_text().find("best\t-\t-") != std::string::npos);

    CHECK_THROWS_AS(immerse(0), std::domain_error);
}

TEST_CASE("immersions stay above the nonimmersion")
{
    for (int e = 7; e <= 20; ++e) {
        const auto r = immerse(pow2(e) - 1);
        REQUIRE(r.best);
        REQUIRE(r.james_nonimm);
        CHECK(*r.lifting - *r.james_nonimm >= 1);
        CHECK(*r.james_nonimm < *r.best);
        for (const auto& v : {r.lifting, r.milgram, r.dm})
            if (v)
                CHECK(*r.best <= *v);
    }
}

TEST_CASE("report text")
{
    CHECK(immerse(16383).to_text()
          == "16383\tlifting\t32747\n16383\tmilgram\t32748\n16383\tdm\t32748\n"
             "16383\tjames_nonimm\t32738\nbest\tlifting\t32747\nmargin\t1\n");
}
