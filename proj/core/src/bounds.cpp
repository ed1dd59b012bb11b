#include "nagell/bounds.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace nagell {
namespace {

// lambda_2(y) for the bases with a known effective measure, as num/100.
constexpr std::array<LambdaEntry, 72> kLambdaTable{{
    {2, 148, 100}, {3, 165, 100}, {5, 136, 100}, {6, 146, 100},
    {10, 199, 100}, {12, 165, 100}, {13, 153, 100}, {14, 184, 100},
    {17, 194, 100}, {18, 187, 100}, {19, 187, 100}, {20, 167, 100},
    {21, 167, 100}, {23, 145, 100}, {24, 164, 100}, {26, 197, 100},
    {28, 164, 100}, {29, 160, 100}, {30, 191, 100}, {31, 170, 100},
    {33, 173, 100}, {34, 174, 100}, {35, 187, 100}, {37, 155, 100},
    {38, 172, 100}, {40, 155, 100}, {42, 161, 100}, {43, 191, 100},
    {44, 168, 100}, {45, 153, 100}, {46, 121, 100}, {47, 166, 100},
    {48, 163, 100}, {50, 181, 100}, {51, 165, 100}, {52, 181, 100},
    {53, 151, 100}, {54, 129, 100}, {55, 139, 100}, {56, 176, 100},
    {57, 176, 100}, {58, 166, 100}, {60, 147, 100}, {62, 158, 100},
    {63, 176, 100}, {65, 176, 100}, {66, 157, 100}, {68, 146, 100},
    {69, 173, 100}, {70, 175, 100}, {72, 158, 100}, {73, 151, 100},
    {74, 169, 100}, {75, 191, 100}, {76, 127, 100}, {77, 144, 100},
    {78, 170, 100}, {79, 156, 100}, {80, 172, 100}, {82, 171, 100},
    {83, 155, 100}, {84, 146, 100}, {85, 143, 100}, {87, 189, 100},
    {90, 198, 100}, {91, 182, 100}, {92, 158, 100}, {93, 173, 100},
    {95, 195, 100}, {96, 141, 100}, {98, 154, 100}, {99, 169, 100},
}};

// (y, k) pairs for which the measure is not established.
constexpr std::array<std::pair<unsigned long, long>, 4> kExcluded{{{2, 3}, {2, 7}, {2, 8}, {3, 7}}};

// Thresholds above this are not searched; the power checks get expensive.
constexpr long kMaxThreshold = 1L << 15;

bool is_square_base(unsigned long y) { return is_perfect_square(Integer(y)).is_square; }

struct CheckPair {
  PowerCheck base;
  PowerCheck induction;
  bool satisfied() const { return base.satisfied() && induction.satisfied(); }
};

// Least t >= start with make(t).satisfied(). The predicate is monotone:
// once both checks hold at t they hold at t+1 (the ratio test carries the
// base inequality forward and ((t+1)/t)^d only decreases).
template <typename MakeChecks>
std::pair<long, CheckPair> least_threshold(long start, MakeChecks make) {
  CheckPair at_start = make(start);
  if (at_start.satisfied()) return {start, std::move(at_start)};

  long failed = start;
  long step = 1;
  long hi = start;
  for (;;) {
    hi = std::min(failed + step, kMaxThreshold);
    if (make(hi).satisfied()) break;
    if (hi == kMaxThreshold) {
      throw BoundSearchExhausted("no threshold found below t = " + std::to_string(kMaxThreshold));
    }
    failed = hi;
    step *= 2;
  }
  while (hi - failed > 1) {
    const long mid = failed + (hi - failed) / 2;
    if (make(mid).satisfied()) hi = mid;
    else failed = mid;
  }
  return {hi, make(hi)};
}

Integer power_of(long t, int d) {
  return pow_nat(Integer(t), static_cast<unsigned long>(std::max(d, 0)));
}

CheckPair sandwich_checks(const SubCase& sc, const IntPoly& h, long t) {
  const int d = h.degree();
  const auto exponent = static_cast<unsigned long>(sc.exponent(t));
  return CheckPair{
      PowerCheck::run(2, sc.base(), exponent, 2, h(t) + 1, Requirement::Greater),
      PowerCheck::run(power_of(t, d), sc.base(), 1, 1, power_of(t + 1, d),
                      Requirement::GreaterOrEqual)};
}

// u = (2t + r - 1)/2 = t for odd exponents; the base exponent
// (2 - lambda) t + 1/2 is written over 2*den.
CheckPair hypergeometric_checks(const SubCase& sc, const LambdaEntry& lambda, const IntPoly& h,
                                long t) {
  const int d = h.degree();
  const unsigned long slope = 2 * lambda.den - lambda.num;
  return CheckPair{
      PowerCheck::run(2, sc.base(), 2 * slope * static_cast<unsigned long>(t) + lambda.den,
                      2 * lambda.den, h(t) + 1, Requirement::Greater),
      PowerCheck::run(power_of(t, d), sc.base(), slope, lambda.den, power_of(t + 1, d),
                      Requirement::GreaterOrEqual)};
}

bool same_check(const PowerCheck& a, const PowerCheck& b) {
  return a.a == b.a && a.base == b.base && a.num_exp == b.num_exp && a.den == b.den &&
         a.v == b.v && a.requirement == b.requirement && a.verdict == b.verdict;
}

}  // namespace

NotInTable::NotInTable(unsigned long base)
    : std::runtime_error("base " + std::to_string(base) +
                         " has no tabulated irrationality measure"),
      base_(base) {}

std::span<const LambdaEntry> lambda_table() { return kLambdaTable; }

LambdaEntry lambda2(unsigned long y) {
  const auto it = std::lower_bound(kLambdaTable.begin(), kLambdaTable.end(), y,
                                   [](const LambdaEntry& e, unsigned long v) { return e.base < v; });
  if (it == kLambdaTable.end() || it->base != y) throw NotInTable(y);
  return *it;
}

bool is_excluded_pair(unsigned long y, long k) {
  return std::find(kExcluded.begin(), kExcluded.end(), std::pair{y, k}) != kExcluded.end();
}

long validity_floor(unsigned long y) {
  long floor = 3;
  for (const auto& [base, k] : kExcluded)
    if (base == y) floor = std::max(floor, k + 1);
  return floor;
}

Integer coeff_bound(const IntPoly& p) {
  Integer c = 0;
  for (const auto& v : p.coeffs()) c += abs(v);
  return c;
}

std::string to_string(BoundMethod m) {
  return m == BoundMethod::Sandwich ? "sandwich" : "hypergeometric";
}

std::string to_string(Requirement r) {
  return r == Requirement::Greater ? "greater" : "greater_or_equal";
}

std::string to_string(std::strong_ordering o) {
  if (o < 0) return "less";
  if (o > 0) return "greater";
  return "equal";
}

PowerCheck PowerCheck::run(Integer a, unsigned long base, unsigned long num_exp, unsigned long den,
                           Integer v, Requirement requirement) {
  const auto verdict = cmp_scaled_power(a, Integer(base), num_exp, den, v);
  return PowerCheck{std::move(a), base, num_exp, den, std::move(v), requirement, verdict};
}

std::strong_ordering PowerCheck::replay() const {
  return cmp_scaled_power(a, Integer(base), num_exp, den, v);
}

bool PowerCheck::satisfied() const {
  return requirement == Requirement::Greater ? verdict > 0 : verdict >= 0;
}

bool BoundCertificate::replay() const {
  return base_check.replay() == base_check.verdict &&
         induction_check.replay() == induction_check.verdict && base_check.satisfied() &&
         induction_check.satisfied();
}

BoundCertificate sandwich_t0(const SubCase& sc) {
  const unsigned long y = sc.base();
  if (sc.parity != 0 && !is_square_base(y)) {
    throw PreconditionViolation("sandwich bound needs y^(2t+r) to be a perfect square");
  }
  if (sc.g_t.is_zero()) {
    throw DegenerateEquation("G vanishes on this parity class: every exponent gives x = y^(N/2)");
  }

  const IntPoly h = sc.g_t.abs_envelope();
  const int d = sc.g_t.degree();
  auto make = [&](long t) { return sandwich_checks(sc, h, t); };
  auto [t0, checks] = least_threshold(std::max(sc.t_min, 1L), make);

  std::vector<long> zero_hits;
  for (const auto& root : integer_roots_from(sc.g_t, t0)) {
    if (!root.fits_slong_p()) throw BoundSearchExhausted("root of G beyond the exponent range");
    zero_hits.push_back(root.get_si());
  }

  return BoundCertificate{BoundMethod::Sandwich, sc.parity, sc.t_min,
                          t0, coeff_bound(sc.g_t), d,
                          h, std::nullopt, 0,
                          std::move(checks.base), std::move(checks.induction), std::move(zero_hits)};
}

BoundCertificate hypergeometric_t0(const SubCase& sc) {
  if (sc.parity != 1) throw PreconditionViolation("hypergeometric bound needs odd exponents");
  const unsigned long y = sc.base();
  const LambdaEntry lambda = lambda2(y);
  const long floor = validity_floor(y);

  const IntPoly h = sc.g_t.abs_envelope();
  const int d = sc.g_t.degree();
  auto make = [&](long t) { return hypergeometric_checks(sc, lambda, h, t); };
  auto [t0, checks] = least_threshold(std::max({sc.t_min, floor, 1L}), make);

  return BoundCertificate{BoundMethod::Hypergeometric, sc.parity, sc.t_min,
                          t0, coeff_bound(sc.g_t), d,
                          h, lambda, floor,
                          std::move(checks.base), std::move(checks.induction), {}};
}

BoundCertificate certify(const SubCase& sc) {
  if (sc.parity == 0 || is_square_base(sc.base())) return sandwich_t0(sc);
  return hypergeometric_t0(sc);
}

PowerCheck gap_check(unsigned long y, long u, const Integer& bound) {
  if (u <= 2) throw PreconditionViolation("the measure needs exponent index k > 2");
  if (is_excluded_pair(y, u)) {
    throw PreconditionViolation("(y, k) = (" + std::to_string(y) + ", " + std::to_string(u) +
                                ") is excluded from the measure");
  }
  if (sgn(bound) < 0) throw PreconditionViolation("gap bound must be nonnegative");
  const LambdaEntry lambda = lambda2(y);
  const unsigned long slope = 2 * lambda.den - lambda.num;
  return PowerCheck::run(2, y, 2 * slope * static_cast<unsigned long>(u) + lambda.den,
                         2 * lambda.den, bound + 1, Requirement::Greater);
}

bool verify_certificate(const SubCase& sc, const BoundCertificate& cert) {
  if (cert.parity != sc.parity || cert.t_min != sc.t_min || cert.t0 < std::max(sc.t_min, 1L)) {
    return false;
  }
  const IntPoly h = sc.g_t.abs_envelope();
  if (cert.envelope != h || cert.degree != sc.g_t.degree() ||
      cert.coeff_bound != coeff_bound(sc.g_t)) {
    return false;
  }

  CheckPair expected{cert.base_check, cert.induction_check};
  std::vector<long> expected_hits;
  if (cert.method == BoundMethod::Sandwich) {
    if (sc.g_t.is_zero() || (sc.parity != 0 && !is_square_base(sc.base()))) return false;
    expected = sandwich_checks(sc, h, cert.t0);
    for (const auto& root : integer_roots_from(sc.g_t, cert.t0)) {
      if (!root.fits_slong_p()) return false;
      expected_hits.push_back(root.get_si());
    }
  } else {
    if (sc.parity != 1 || !cert.lambda) return false;
    LambdaEntry lambda{};
    try {
      lambda = lambda2(sc.base());
    } catch (const NotInTable&) {
      return false;
    }
    if (*cert.lambda != lambda || cert.validity_floor != validity_floor(sc.base()) ||
        cert.t0 < cert.validity_floor) {
      return false;
    }
    expected = hypergeometric_checks(sc, lambda, h, cert.t0);
  }
  return same_check(expected.base, cert.base_check) &&
         same_check(expected.induction, cert.induction_check) && expected.satisfied() &&
         expected_hits == cert.zero_hits;
}

bool gap_exceeds(unsigned long y, long u, const Integer& bound) {
  return gap_check(y, u, bound).satisfied();
}

}  // namespace nagell
