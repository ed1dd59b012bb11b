#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nagell/bounds.hpp"
#include "nagell/equation.hpp"

namespace nagell {

class VerificationFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Solution {
  Integer x;
  long exponent;
  std::optional<TriangularPoint> triangular;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.x == b.x && a.exponent == b.exponent;
  }
};

/// Builds a Solution after checking x^2 = y^N + G(N) exactly. Throws
/// VerificationFailed otherwise.
Solution make_solution(const EquationSpec& spec, Integer x, long exponent);

/// Inclusive-exclusive range of t values that were tested exhaustively.
struct ScanRange {
  long t_lo = 0;
  long t_hi = 0;
  bool empty() const { return t_hi <= t_lo; }
};

struct SubcaseReport {
  SubCase subcase;
  std::optional<BoundCertificate> certificate;
  std::string diagnostic;  // why no certificate, empty when there is one
  ScanRange scanned;
};

struct SolveReport {
  EquationSpec spec;
  std::vector<SubcaseReport> subcases;
  std::vector<Solution> solutions;  // sorted by exponent, then x
  /// True iff every subcase is certified and scanned covers [t_min, t0):
  /// then `solutions` lists every solution with N >= n_min.
  bool complete = false;
};

struct SolveOptions {
  /// Exponent horizon scanned when a subcase cannot be certified.
  long fallback_horizon = 1000;
  /// Worker threads for finite scans; results do not depend on it.
  unsigned jobs = 1;
};

/// Tests y^(2t+r) + g_t(t) for squareness for every t in [t_lo, t_hi).
/// Throws std::invalid_argument if t_lo < sc.t_min.
std::vector<Solution> finite_scan(const SubCase& sc, long t_lo, long t_hi, unsigned jobs = 1);

struct ScanValue {
  long t;
  Integer value;
  bool is_square;
};

/// The values finite_scan tests, for transcripts and tables.
std::vector<ScanValue> scan_values(const SubCase& sc, long t_lo, long t_hi);

SolveReport solve(const EquationSpec& spec, const SolveOptions& options = {});

/// Direct scan of N in [n_min, n_max] with no bounds and GMP's own square
/// test; independent of the certified path.
std::vector<Solution> brute_oracle(const EquationSpec& spec, long n_max);

/// (n, m) with 2^n + sign*n = m(m+1)/2 for n in [n_min, n_max], by testing
/// 8T + 1 for squareness directly.
std::vector<TriangularPoint> triangular_check_oracle(int sign, long n_max, long n_min = 1);

/// Fills Solution::triangular for every solution of a transformed report.
void attach_triangular(SolveReport& report, const TriangularMap& map);

}  // namespace nagell
