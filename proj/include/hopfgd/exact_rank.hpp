#pragma once

#include <hopfgd/numtheory.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace hopfgd {

using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank over Q of an integer matrix given by rows. Rows must share a length.
std::size_t exact_rank(const IntMatrix& rows);

/// Coefficients x with sum_i x_i * basis[i] == target, if any solution exists.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_combination(const IntMatrix& basis,
                                                       const std::vector<Int>& target);

} // namespace hopfgd
