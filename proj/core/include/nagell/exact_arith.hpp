#pragma once

// Exact integer kernels. Every floor, fractional part and real-valued
// inequality in the solver is reduced to these routines; nothing on the
// certified path touches floating point.

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nagell {

using Integer = mpz_class;

/// Floor of the square root: the r with r*r <= n < (r+1)*(r+1).
/// Throws std::domain_error for negative n.
Integer isqrt(const Integer& n);

struct SquareTest {
  bool is_square = false;
  Integer root;  // isqrt(n) in either case
};

/// Exact perfect-square test. A residue prefilter rejects most non-squares
/// cheaply; the verdict is always confirmed with isqrt.
SquareTest is_perfect_square(const Integer& n);

/// Quadratic-residue prefilter modulo 2^6 * 3^2 * 5 * 7 * 11 * 13.
/// False means n is certainly not a square; true is inconclusive.
bool may_be_square(const Integer& n);

/// Exact power base^exp. Rejects 0^0 with std::domain_error.
Integer pow_nat(const Integer& base, unsigned long exp);

/// Orders a * y^(num_exp/den) against v (all nonnegative) by comparing
/// a^den * y^num_exp with v^den. The fraction is reduced first.
std::strong_ordering cmp_scaled_power(const Integer& a, const Integer& y,
                                      unsigned long num_exp, unsigned long den,
                                      const Integer& v);

std::string to_decimal(const Integer& n);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace nagell
