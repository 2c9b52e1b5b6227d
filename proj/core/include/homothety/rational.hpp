#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homothety {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nearest binary64, ties to even.  boost's convert_to<double> truncates, which
// breaks sign-consistency tests near representable values, so rounding is done
// by hand on the integer mantissa.
double to_double(const Rational& q);

bool fits_int64(const Int& v);

Int int_sqrt_floor(const Int& v);
bool is_perfect_square(const Int& v);

// v = square * kernel with kernel squarefree.
struct SquarefreeSplit {
    Int root;    // sqrt of the square part
    Int kernel;  // squarefree remainder
};
SquarefreeSplit squarefree_split(Int v);

// Prime factorization of a positive 64-bit integer.  Trial division for small
// factors, deterministic Miller-Rabin plus Pollard rho for the rest.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

std::string rational_to_string(const Rational& q);
std::optional<Rational> rational_from_string(const std::string& text);

}  // namespace homothety
