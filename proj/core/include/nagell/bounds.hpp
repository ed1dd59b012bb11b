#pragma once

// Exponent thresholds beyond which x^2 = y^(2t+r) + g(t) has no solution.
//
// Both methods bound |g(t)| by the envelope h(t) = sum |c_i| t^i and show
// h(t) + 1 < M(t), where M(t) - 1 is a lower bound on the distance from
// y^(2t+r) to the nearest other square:
//
//   sandwich        y^(2t+r) is a square s^2; neighbours are 2s +- 1 away,
//                   M(t) = 2 y^((2t+r)/2).
//   hypergeometric  y^(2u+1), u = t, is not a square; the irrationality
//                   measure |sqrt(y) - p/y^u| > y^(-lambda u) gives
//                   M(t) = 2 y^((2 - lambda) u + 1/2).
//
// The bound at t0 is extended to every t >= t0 by the ratio test
// M(t+1)/M(t) >= ((t0+1)/t0)^d >= h(t+1)/h(t). Each certificate carries
// both comparisons so they can be replayed independently.

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagell/equation.hpp"

namespace nagell {

class NotInTable : public std::runtime_error {
 public:
  explicit NotInTable(unsigned long base);
  unsigned long base() const { return base_; }

 private:
  unsigned long base_;
};

class DegenerateEquation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundSearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Effective irrationality measure lambda = num/den of sqrt(y) along
/// denominators y^k.
struct LambdaEntry {
  unsigned long base;
  unsigned long num;
  unsigned long den;
  friend bool operator==(const LambdaEntry&, const LambdaEntry&) = default;
};

std::span<const LambdaEntry> lambda_table();
/// Throws NotInTable.
LambdaEntry lambda2(unsigned long y);

/// Least exponent index k for which the measure may be used: past every
/// excluded (y, k) pair and with k > 2.
long validity_floor(unsigned long y);
bool is_excluded_pair(unsigned long y, long k);

/// Sum of |c_i|; |p(t)| <= C * t^deg(p) for t >= 1.
Integer coeff_bound(const IntPoly& p);

enum class BoundMethod { Sandwich, Hypergeometric };
enum class Requirement { Greater, GreaterOrEqual };

std::string to_string(BoundMethod m);
std::string to_string(Requirement r);
std::string to_string(std::strong_ordering o);

/// One recorded comparison of a * base^(num_exp/den) against v.
struct PowerCheck {
  Integer a;
  unsigned long base;
  unsigned long num_exp;
  unsigned long den;
  Integer v;
  Requirement requirement;
  std::strong_ordering verdict;

  static PowerCheck run(Integer a, unsigned long base, unsigned long num_exp, unsigned long den,
                        Integer v, Requirement requirement);
  std::strong_ordering replay() const;
  bool satisfied() const;
};

struct BoundCertificate {
  BoundMethod method;
  int parity;
  long t_min;
  long t0;
  Integer coeff_bound;
  int degree;
  IntPoly envelope;
  std::optional<LambdaEntry> lambda;
  long validity_floor;
  PowerCheck base_check;
  PowerCheck induction_check;
  /// Roots t >= t0 of g_t. Only sandwich certificates can have them; each
  /// gives the solution x = y^((2t+r)/2).
  std::vector<long> zero_hits;

  long exponent_threshold() const { return 2 * t0 + parity; }
  /// Re-runs both checks; true iff the verdicts match bit-for-bit and
  /// both requirements hold.
  bool replay() const;
};

/// Requires y^parity to be a perfect square. Throws DegenerateEquation
/// when g_t is identically zero.
BoundCertificate sandwich_t0(const SubCase& sc);

/// Requires odd exponents and y in the measure table (NotInTable).
BoundCertificate hypergeometric_t0(const SubCase& sc);

/// Sandwich when y^parity is a square, hypergeometric otherwise.
BoundCertificate certify(const SubCase& sc);

/// Independent verifier: rebuilds the checks a certificate should contain
/// from the subcase alone, runs them, and compares with the recorded ones.
bool verify_certificate(const SubCase& sc, const BoundCertificate& cert);

/// The comparison 2 y^((2-lambda) u + 1/2) > bound + 1 as a recorded check.
/// Throws PreconditionViolation when u <= 2 or (y, u) is excluded.
PowerCheck gap_check(unsigned long y, long u, const Integer& bound);

/// True iff 2 y^((2-lambda) u + 1/2) - 1 > bound. When true, y^(2u+1) is
/// more than `bound` away from every perfect square.
bool gap_exceeds(unsigned long y, long u, const Integer& bound);

}  // namespace nagell
