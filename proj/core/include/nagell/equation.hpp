#pragma once

#include <array>
#include <string>

#include "nagell/int_poly.hpp"

namespace nagell {

/// x^2 = y^N + G(N), solved for integers x >= 0 and N >= n_min.
class EquationSpec {
 public:
  /// Throws std::invalid_argument unless base >= 2 and n_min >= 0.
  EquationSpec(unsigned long base, IntPoly perturbation, long n_min);

  unsigned long base() const { return base_; }
  const IntPoly& perturbation() const { return g_; }
  long n_min() const { return n_min_; }

  /// y^N + G(N).
  Integer rhs(long exponent) const;
  std::string display() const;

  friend bool operator==(const EquationSpec&, const EquationSpec&) = default;

 private:
  unsigned long base_;
  IntPoly g_;
  long n_min_;
};

/// The equation restricted to exponents N = 2t + parity.
struct SubCase {
  EquationSpec parent;
  int parity;   // 0 or 1
  long t_min;   // least t >= 0 with 2t + parity >= n_min
  IntPoly g_t;  // G(2t + parity) as a polynomial in t

  long exponent(long t) const { return 2 * t + parity; }
  unsigned long base() const { return parent.base(); }
  /// y^(2t+parity) + g_t(t).
  Integer rhs(long t) const;
};

/// Subcases for even (index 0) and odd (index 1) exponents.
std::array<SubCase, 2> parity_split(const EquationSpec& spec);
SubCase make_subcase(const EquationSpec& spec, int parity);

struct TriangularPoint {
  long n;
  Integer m;
  friend bool operator==(const TriangularPoint&, const TriangularPoint&) = default;
};

/// Bijection between solutions of 2^n + sign*n = m(m+1)/2 and solutions
/// (x, N) = (2m+1, n+3) of x^2 = 2^N + sign*8(N-3) + 1.
struct TriangularMap {
  int sign;

  std::pair<Integer, long> forward(long n, const Integer& m) const;
  /// Throws std::invalid_argument for even x.
  TriangularPoint backward(const Integer& x, long exponent) const;
};

/// Throws std::invalid_argument unless sign is +1 or -1 and n_min >= 0.
std::pair<EquationSpec, TriangularMap> triangular_transform(int sign, long n_min = 1);

}  // namespace nagell
