#include "nagell/constructor.hpp"

#include <algorithm>
#include <sstream>

namespace nagell {
namespace {

Integer two_pow(long n) { return pow_nat(2, static_cast<unsigned long>(n)); }

std::string product_over(std::span<const long> nodes) {
  std::string out;
  for (long s : nodes) out += "(n-" + std::to_string(s) + ")";
  return out;
}

}  // namespace

bool satisfies(const IntPoly& d, const PowerSolution& s) {
  return s.x * s.x + d(s.n) == two_pow(s.n);
}

std::string ConstructionState::falling_factorial_form() const {
  // Prefix of length nodes.size() has coefficient 1, shorter prefixes take
  // the chosen coefficients from the latest back to c_2.
  std::ostringstream os;
  os << product_over(nodes);
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const Integer& c = coefficients[i];
    if (sgn(c) == 0) continue;
    os << (sgn(c) < 0 ? " - " : " + ");
    const Integer mag = abs(c);
    if (mag != 1) os << mag.get_str();
    os << product_over(std::span<const long>(nodes).first(nodes.size() - coefficients.size() + i));
  }
  os << " + 7";
  return os.str();
}

ConstructionState seed_state() {
  ConstructionState state;
  state.nodes = {3, 4, 5};
  state.leading = IntPoly::constant(1);
  for (long s : state.nodes) state.leading = state.leading * IntPoly::linear_factor(s);
  state.lower = IntPoly::constant(7);
  state.solutions = {{1, 3}, {3, 4}, {5, 5}};
  return state;
}

CoefficientChoice propose_coefficient(const ConstructionState& state, long node,
                                      std::optional<Integer> x_cap) {
  if (!state.nodes.empty() && node <= *std::max_element(state.nodes.begin(), state.nodes.end())) {
    throw std::invalid_argument("new node must exceed every existing node");
  }
  CoefficientChoice choice{node, state.leading(node), two_pow(node) - state.lower(node), {}};
  const Integer& m = choice.modulus;
  const Integer cap = x_cap ? *x_cap : Integer(m + isqrt(abs(choice.target)));

  Integer target_residue = choice.target % m;
  if (sgn(target_residue) < 0) target_residue += m;

  std::vector<Integer> roots;
  for (Integer r = 0; r < m; ++r) {
    if ((r * r) % m == target_residue) roots.push_back(r);
  }
  if (roots.empty()) {
    throw NoResidueSolution("x^2 == " + to_decimal(choice.target) + " (mod " + to_decimal(m) +
                                ") has no solution at node " + std::to_string(node),
                            state);
  }

  for (Integer base = 0; base <= cap; base += m) {
    for (const Integer& r : roots) {
      Integer x = base + r;
      if (x > cap) break;
      Integer c = (choice.target - x * x) / m;
      choice.candidates.push_back(Candidate{std::move(x), std::move(c)});
    }
  }
  return choice;
}

ConstructionState extend(const ConstructionState& state, long node, const Candidate& choice) {
  const Integer modulus = state.leading(node);
  const Integer target = two_pow(node) - state.lower(node);
  if (choice.c * modulus + choice.x * choice.x != target) {
    throw ConstructionVerificationFailed("choice (x=" + to_decimal(choice.x) + ", c=" +
                                         to_decimal(choice.c) + ") does not fit node " +
                                         std::to_string(node));
  }

  ConstructionState next = state;
  next.lower = state.lower + choice.c * state.leading;
  next.leading = state.leading * IntPoly::linear_factor(node);
  next.nodes.push_back(node);
  next.coefficients.push_back(choice.c);
  next.solutions.push_back(PowerSolution{choice.x, node});

  const IntPoly d = next.d();
  for (const auto& s : next.solutions) {
    if (!satisfies(d, s)) {
      throw ConstructionVerificationFailed("recorded solution (" + to_decimal(s.x) + ", " +
                                           std::to_string(s.n) + ") broken by extension");
    }
  }
  std::sort(next.solutions.begin(), next.solutions.end(),
            [](const PowerSolution& a, const PowerSolution& b) {
              return a.x != b.x ? a.x < b.x : a.n < b.n;
            });
  return next;
}

ConstructionState build_family(int steps, ChoicePolicy policy, std::span<const Candidate> choices) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (policy == ChoicePolicy::Explicit && choices.size() < static_cast<std::size_t>(steps)) {
    throw std::invalid_argument("explicit policy needs one choice per step");
  }
  ConstructionState state = seed_state();
  for (int i = 0; i < steps; ++i) {
    const long node = state.nodes.back() + 1;
    if (policy == ChoicePolicy::Explicit) {
      state = extend(state, node, choices[static_cast<std::size_t>(i)]);
    } else {
      const CoefficientChoice choice = propose_coefficient(state, node);
      state = extend(state, node, choice.candidates.front());
    }
  }
  return state;
}

}  // namespace nagell
