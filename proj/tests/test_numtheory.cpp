#include <hopfgd/numtheory.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using namespace hopfgd;
using boost::multiprecision::cpp_int;

namespace {

// Valuation of C(a,b) from the exact big integer.
Int binomial_valuation_oracle(int a, int b)
{
    cpp_int c = 1;
    for (int i = 0; i < b; ++i)
        c = c * (a - i) / (i + 1);
    Int v = 0;
    while ((c & 1) == 0) {
        c >>= 1;
        ++v;
    }
    return v;
}

Int phi_oracle(Int n)
{
    Int count = 0;
    for (Int i = 1; i <= n; ++i) {
        const Int r = i % 8;
        count += (r == 0 || r == 1 || r == 2 || r == 4);
    }
    return count;
}

} // namespace

TEST_CASE("two-adic valuation")
{
    CHECK(nu(12) == 2);
    CHECK(nu(1) == 0);
    CHECK(nu(pow2(55)) == 55);
    CHECK_THROWS_AS(nu(0), std::domain_error);
    CHECK_THROWS_AS(nu(-4), std::domain_error);
}

TEST_CASE("binary digit sum")
{
    CHECK(alpha(7) == 3);
    CHECK(alpha(9) == 2);
    for (int e = 1; e < 62; ++e)
        CHECK(alpha(pow2(e) - 1) == e);
    CHECK_THROWS_AS(alpha(-1), std::domain_error);
}

TEST_CASE("modified valuation")
{
    CHECK(nu_prime(3) == -4);
    CHECK(nu_prime(8) == 3);
    CHECK(nu_prime(35) == -4);
    CHECK_THROWS_AS(nu_prime(1), std::domain_error);
}

TEST_CASE("positive part")
{
    CHECK(pos_part(-5) == 0);
    CHECK(pos_part(0) == 0);
    CHECK(pos_part(4) == 4);
    for (Int x = -50; x <= 50; ++x) {
        CHECK(pos_part(x).value() == std::max<Int>(0, x));
        CHECK(x + pos_part(-x) >= 0);
    }
}

TEST_CASE("binomial valuation agrees with big integers")
{
    CHECK(nu_binom(32, 8) == 2);
    CHECK(nu_binom(32, 3) == 5);
    CHECK(nu_binom(17, 0) == 0);
    for (int a = 1; a <= 64; ++a)
        for (int b = 1; b <= a; ++b)
            REQUIRE(nu_binom(a, b) == binomial_valuation_oracle(a, b));
    for (Int i = 1; i <= 32; ++i)
        CHECK(nu_binom(32, i) == 5 - nu(i));
    CHECK_THROWS_AS(nu_binom(3, 4), std::domain_error);
}

TEST_CASE("phi counts residues 0, 1, 2, 4 mod 8")
{
    CHECK(phi(7) == 3);
    CHECK(phi(8) == 4);
    CHECK(phi(16) == 8);
    for (Int n = 1; n <= 500; ++n) {
        REQUIRE(phi(n) == phi_oracle(n));
        CHECK(phi(n + 8) == phi(n) + 4);
    }
}

TEST_CASE("rho")
{
    CHECK(rho(0) == 1);
    CHECK(rho(3) == 8);
    CHECK(rho(6) == 12);
    CHECK(rho(4) == 9);
}
