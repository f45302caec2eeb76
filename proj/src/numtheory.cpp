#include <hopfgd/numtheory.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace hopfgd {

namespace {

void require_positive(Int n, const char* what)
{
    if (n <= 0)
        throw std::domain_error(std::string(what) + ": argument must be positive, got "
                                + std::to_string(n));
}

} // namespace

Int nu(Int n)
{
    require_positive(n, "nu");
    return std::countr_zero(static_cast<std::uint64_t>(n));
}

Int alpha(Int n)
{
    // alpha(0) = 0 is used internally by nu_binom.
    if (n < 0)
        throw std::domain_error("alpha: negative argument " + std::to_string(n));
    return std::popcount(static_cast<std::uint64_t>(n));
}

Int nu_prime(Int k)
{
    if (k < 2)
        throw std::domain_error("nu_prime: requires k >= 2, got " + std::to_string(k));
    return (k % 2 == 0) ? nu(k) : -4;
}

Int nu_binom(Int a, Int b)
{
    if (b < 0 || a < b)
        throw std::domain_error("nu_binom: requires 0 <= b <= a");
    return alpha(b) + alpha(a - b) - alpha(a);
}

Int phi(Int n)
{
    require_positive(n, "phi");
    static constexpr Int partial[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    return 4 * (n / 8) + partial[n % 8];
}

Int rho(Int k)
{
    if (k < 0)
        throw std::domain_error("rho: negative argument " + std::to_string(k));
    const Int a = k / 4;
    const Int b = k % 4;
    return 8 * a + (Int{1} << b);
}

Int pow2(int t)
{
    if (t < 0 || t > 62)
        throw std::domain_error("pow2: exponent out of range " + std::to_string(t));
    return Int{1} << t;
}

} // namespace hopfgd
