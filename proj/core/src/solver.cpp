#include "nagell/solver.hpp"

#include <algorithm>
#include <future>

namespace nagell {
namespace {

std::vector<Solution> scan_chunk(const SubCase& sc, long t_lo, long t_hi) {
  std::vector<Solution> out;
  if (t_hi <= t_lo) return out;
  const Integer y(sc.base());
  const Integer step = y * y;
  Integer power = pow_nat(y, static_cast<unsigned long>(sc.exponent(t_lo)));
  for (long t = t_lo; t < t_hi; ++t, power *= step) {
    const Integer value = power + sc.g_t(t);
    if (sgn(value) < 0 || !may_be_square(value)) continue;
    auto test = is_perfect_square(value);
    if (test.is_square) out.push_back(make_solution(sc.parent, std::move(test.root), sc.exponent(t)));
  }
  return out;
}

void sort_unique(std::vector<Solution>& solutions) {
  std::sort(solutions.begin(), solutions.end(), [](const Solution& a, const Solution& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.x < b.x;
  });
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
}

long fallback_t_hi(const SubCase& sc, long horizon) {
  if (horizon < sc.parity) return sc.t_min;
  return std::max(sc.t_min, (horizon - sc.parity) / 2 + 1);
}

}  // namespace

Solution make_solution(const EquationSpec& spec, Integer x, long exponent) {
  if (sgn(x) < 0 || exponent < spec.n_min() || x * x != spec.rhs(exponent)) {
    throw VerificationFailed("(x, N) = (" + to_decimal(x) + ", " + std::to_string(exponent) +
                             ") does not solve " + spec.display());
  }
  return Solution{std::move(x), exponent, std::nullopt};
}

std::vector<Solution> finite_scan(const SubCase& sc, long t_lo, long t_hi, unsigned jobs) {
  if (t_lo < sc.t_min) throw std::invalid_argument("finite_scan: range starts below t_min");
  const long span = t_hi - t_lo;
  if (jobs <= 1 || span < 2 * static_cast<long>(jobs)) return scan_chunk(sc, t_lo, t_hi);

  std::vector<std::future<std::vector<Solution>>> parts;
  parts.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const long lo = t_lo + span * j / jobs;
    const long hi = t_lo + span * (j + 1) / jobs;
    parts.push_back(std::async(std::launch::async, scan_chunk, std::cref(sc), lo, hi));
  }
  std::vector<Solution> out;
  for (auto& part : parts) {
    auto chunk = part.get();
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<ScanValue> scan_values(const SubCase& sc, long t_lo, long t_hi) {
  if (t_lo < sc.t_min) throw std::invalid_argument("scan_values: range starts below t_min");
  std::vector<ScanValue> out;
  for (long t = t_lo; t < t_hi; ++t) {
    Integer value = sc.rhs(t);
    const bool square = sgn(value) >= 0 && is_perfect_square(value).is_square;
    out.push_back(ScanValue{t, std::move(value), square});
  }
  return out;
}

SolveReport solve(const EquationSpec& spec, const SolveOptions& options) {
  SolveReport report{spec, {}, {}, true};
  for (const SubCase& sc : parity_split(spec)) {
    SubcaseReport sub{sc, std::nullopt, {}, {}};
    try {
      sub.certificate = certify(sc);
      sub.scanned = ScanRange{sc.t_min, sub.certificate->t0};
    } catch (const NotInTable& e) {
      sub.diagnostic = std::string("NotInTable: ") + e.what();
    } catch (const DegenerateEquation& e) {
      sub.diagnostic = std::string("DegenerateEquation: ") + e.what();
    } catch (const BoundSearchExhausted& e) {
      sub.diagnostic = std::string("BoundSearchExhausted: ") + e.what();
    }
    if (!sub.certificate) {
      report.complete = false;
      sub.scanned = ScanRange{sc.t_min, fallback_t_hi(sc, options.fallback_horizon)};
    }

    auto found = finite_scan(sc, sub.scanned.t_lo, sub.scanned.t_hi, options.jobs);
    std::move(found.begin(), found.end(), std::back_inserter(report.solutions));

    if (sub.certificate) {
      const Integer y(sc.base());
      for (long t : sub.certificate->zero_hits) {
        const long exponent = sc.exponent(t);
        Integer x = isqrt(pow_nat(y, static_cast<unsigned long>(exponent)));
        report.solutions.push_back(make_solution(spec, std::move(x), exponent));
      }
    }
    report.subcases.push_back(std::move(sub));
  }
  sort_unique(report.solutions);
  return report;
}

std::vector<Solution> brute_oracle(const EquationSpec& spec, long n_max) {
  if (n_max < spec.n_min()) throw std::invalid_argument("brute_oracle: n_max below n_min");
  std::vector<Solution> out;
  const Integer y(spec.base());
  for (long n = spec.n_min(); n <= n_max; ++n) {
    Integer value;
    mpz_pow_ui(value.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(n));
    value += spec.perturbation()(n);
    if (sgn(value) < 0 || mpz_perfect_square_p(value.get_mpz_t()) == 0) continue;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
    out.push_back(make_solution(spec, std::move(root), n));
  }
  return out;
}

std::vector<TriangularPoint> triangular_check_oracle(int sign, long n_max, long n_min) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (n_min < 0 || n_max < n_min) throw std::invalid_argument("bad n range");
  std::vector<TriangularPoint> out;
  for (long n = n_min; n <= n_max; ++n) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(n));
    t += sign * n;
    if (sgn(t) < 0) continue;
    const Integer disc = 8 * t + 1;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    out.push_back(TriangularPoint{n, Integer((root - 1) / 2)});
  }
  return out;
}

void attach_triangular(SolveReport& report, const TriangularMap& map) {
  for (auto& s : report.solutions) s.triangular = map.backward(s.x, s.exponent);
}

}  // namespace nagell
