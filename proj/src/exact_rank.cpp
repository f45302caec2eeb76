#include <hopfgd/exact_rank.hpp>

#include <stdexcept>
#include <utility>

namespace hopfgd {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::size_t common_width(const IntMatrix& rows)
{
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows)
        if (row.size() != width)
            throw std::invalid_argument("exact_rank: ragged matrix");
    return width;
}

} // namespace

std::size_t exact_rank(const IntMatrix& rows)
{
    const std::size_t width = common_width(rows);
    std::vector<std::vector<BigInt>> a(rows.size(), std::vector<BigInt>(width));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < width; ++c)
            a[i][c] = rows[i][c];

    // Fraction-free (Bareiss) elimination; every division below is exact.
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < width && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0)
            ++pivot;
        if (pivot == a.size())
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            for (std::size_t c = col + 1; c < width; ++c)
                a[i][c] = (a[rank][col] * a[i][c] - a[i][col] * a[rank][c]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve_combination(const IntMatrix& basis,
                                                       const std::vector<Int>& target)
{
    const std::size_t unknowns = basis.size();
    const std::size_t equations = target.size();
    for (const auto& row : basis)
        if (row.size() != equations)
            throw std::invalid_argument("solve_combination: dimension mismatch");

    // Augmented system: column i of the coefficient block is basis[i].
    std::vector<std::vector<Rational>> m(equations, std::vector<Rational>(unknowns + 1));
    for (std::size_t r = 0; r < equations; ++r) {
        for (std::size_t i = 0; i < unknowns; ++i)
            m[r][i] = basis[i][r];
        m[r][unknowns] = target[r];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < equations; ++col) {
        std::size_t pivot = row;
        while (pivot < equations && m[pivot][col] == 0)
            ++pivot;
        if (pivot == equations)
            continue;
        std::swap(m[pivot], m[row]);
        const Rational lead = m[row][col];
        for (auto& v : m[row])
            v /= lead;
        for (std::size_t r = 0; r < equations; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c <= unknowns; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < equations; ++r)
        if (m[r][unknowns] != 0)
            return std::nullopt;

    std::vector<Rational> x(unknowns, Rational(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        x[pivot_cols[r]] = m[r][unknowns];
    return x;
}

} // namespace hopfgd
