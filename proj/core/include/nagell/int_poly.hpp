#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nagell/exact_arith.hpp"

namespace nagell {

/// Integer-coefficient polynomial in one variable, constant term first.
/// Always normalized: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient list and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// (x - root), the building block of falling-factorial products.
  static IntPoly linear_factor(const Integer& root);

  /// Comma-separated coefficients, constant first: "-23,8" is 8N - 23.
  /// Accepts U+2212 as a minus sign and ignores surrounding blanks.
  static IntPoly parse(std::string_view text);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int i) const;

  Integer operator()(const Integer& v) const;
  Integer operator()(long v) const { return (*this)(Integer(v)); }

  IntPoly derivative() const;
  /// p(a*t + b) as a polynomial in t.
  IntPoly compose_linear(const Integer& a, const Integer& b) const;
  /// Sum of |c_i| t^i; dominates |p(t)| for every t >= 0.
  IntPoly abs_envelope() const;

  /// Inverse of parse().
  std::string to_string() const;
  /// Human-readable form such as "8N - 23".
  std::string display(std::string_view var) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& k, const IntPoly& p);
  friend IntPoly operator-(const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Horner evaluation.
Integer eval_poly(const IntPoly& p, const Integer& v);

/// Every integer root of a nonzero p inside [lo, hi], ascending. Exact:
/// the interval is cut into pieces on which p is monotone (recursively
/// via p'), then each piece is bisected.
std::vector<Integer> integer_roots(const IntPoly& p, const Integer& lo, const Integer& hi);

/// Every integer root >= lo, using the Cauchy bound 1 + max|c_i| as the
/// upper end.
std::vector<Integer> integer_roots_from(const IntPoly& p, const Integer& lo);

}  // namespace nagell
