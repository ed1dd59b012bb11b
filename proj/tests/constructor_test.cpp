#include <doctest.h>

#include "nagell/constructor.hpp"

using nagell::Candidate;
using nagell::Integer;
using nagell::IntPoly;
using nagell::PowerSolution;

namespace {

using Sols = std::vector<PowerSolution>;

const std::vector<Candidate> kReferenceChoices{{3, 8}, {1, -3}, {3, 1}, {65, -6}};

bool has_candidate(const nagell::CoefficientChoice& c, long x, long coeff) {
  for (const auto& k : c.candidates)
    if (k.x == x && k.c == coeff) return true;
  return false;
}

}  // namespace

TEST_CASE("seed") {
  const auto s = nagell::seed_state();
  CHECK(s.nodes == std::vector<long>{3, 4, 5});
  CHECK(s.d() == IntPoly{-53, 47, -12, 1});
  CHECK(s.solutions == Sols{{1, 3}, {3, 4}, {5, 5}});
  for (long n : {3L, 4L, 5L}) CHECK(s.d()(n) == 7);
  for (const auto& sol : s.solutions) CHECK(nagell::satisfies(s.d(), sol));
  CHECK(s.falling_factorial_form() == "(n-3)(n-4)(n-5) + 7");
}

TEST_CASE("propose_coefficient") {
  auto s = nagell::seed_state();
  const auto six = nagell::propose_coefficient(s, 6);
  CHECK(six.modulus == 6);
  CHECK(six.target == 57);
  CHECK(has_candidate(six, 3, 8));
  for (const auto& k : six.candidates) CHECK(k.x % 6 == 3);

  s = nagell::extend(s, 6, {3, 8});
  const auto seven = nagell::propose_coefficient(s, 7);
  CHECK(seven.modulus == 24);
  CHECK(seven.target == -71);
  CHECK(seven.candidates.front() == Candidate{1, -3});

  s = nagell::extend(nagell::extend(s, 7, {1, -3}), 8, {3, 1});
  const auto nine = nagell::propose_coefficient(s, 9);
  CHECK(nine.modulus == 720);
  CHECK(nine.target == -95);
  CHECK(has_candidate(nine, 25, -1));
  CHECK(has_candidate(nine, 65, -6));
  CHECK(nine.candidates.front() == Candidate{25, -1});

  for (const auto& c : {six, seven, nine}) {
    for (std::size_t i = 0; i < c.candidates.size(); ++i) {
      CHECK(c.candidates[i].c * c.modulus + c.candidates[i].x * c.candidates[i].x == c.target);
      if (i) CHECK(c.candidates[i - 1].x < c.candidates[i].x);
    }
  }
}

TEST_CASE("propose_coefficient errors") {
  const auto s = nagell::seed_state();
  CHECK_THROWS_AS(nagell::propose_coefficient(s, 5), std::invalid_argument);
  CHECK_THROWS_AS(nagell::propose_coefficient(s, 4), std::invalid_argument);
  // Skipping to node 10: M = 210, R = 1024 - 847 = 177, and 177 = 2 (mod 5)
  // is not a square.
  try {
    nagell::propose_coefficient(s, 10);
    FAIL("expected NoResidueSolution");
  } catch (const nagell::NoResidueSolution& e) {
    CHECK(e.partial().solutions == s.solutions);
  }
}

TEST_CASE("extend") {
  const auto s = nagell::extend(nagell::seed_state(), 6, {3, 8});
  CHECK(s.solutions == Sols{{1, 3}, {3, 4}, {3, 6}, {5, 5}});
  CHECK(s.falling_factorial_form() == "(n-3)(n-4)(n-5)(n-6) + 8(n-3)(n-4)(n-5) + 7");
  CHECK(s.d().coeffs().back() == 1);
  CHECK_THROWS_AS(nagell::extend(nagell::seed_state(), 6, {5, 8}),
                  nagell::ConstructionVerificationFailed);
}

TEST_CASE("reference chain") {
  const auto s = nagell::build_family(4, nagell::ChoicePolicy::Explicit, kReferenceChoices);
  CHECK(s.coefficients == std::vector<Integer>{8, -3, 1, -6});
  CHECK(s.solutions == Sols{{1, 3}, {1, 7}, {3, 4}, {3, 6}, {3, 8}, {5, 5}, {65, 9}});
  for (const auto& sol : s.solutions) CHECK(nagell::satisfies(s.d(), sol));

  const auto two = nagell::build_family(2, nagell::ChoicePolicy::Explicit, kReferenceChoices);
  CHECK(two.solutions == Sols{{1, 3}, {1, 7}, {3, 4}, {3, 6}, {5, 5}});
  const auto three = nagell::build_family(3, nagell::ChoicePolicy::Explicit, kReferenceChoices);
  CHECK(three.solutions == Sols{{1, 3}, {1, 7}, {3, 4}, {3, 6}, {3, 8}, {5, 5}});

  CHECK(nagell::build_family(0, nagell::ChoicePolicy::SmallestX).solutions.size() == 3);
  CHECK_THROWS_AS(nagell::build_family(3, nagell::ChoicePolicy::Explicit,
                                       std::span(kReferenceChoices).first(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nagell::build_family(-1, nagell::ChoicePolicy::SmallestX), std::invalid_argument);
}

TEST_CASE("smallest-x policy") {
  const auto s = nagell::build_family(4, nagell::ChoicePolicy::SmallestX);
  CHECK(s.solutions.size() == 7);
  CHECK(s.coefficients.back() == -1);
  CHECK(std::find(s.solutions.begin(), s.solutions.end(), PowerSolution{25, 9}) != s.solutions.end());
  for (const auto& sol : s.solutions) CHECK(nagell::satisfies(s.d(), sol));
}

TEST_CASE("growth and node vanishing") {
  auto s = nagell::seed_state();
  int steps = 0;
  for (;;) {
    const long node = s.nodes.back() + 1;
    nagell::CoefficientChoice choice;
    try {
      choice = nagell::propose_coefficient(s, node);
    } catch (const nagell::NoResidueSolution&) {
      break;
    }
    REQUIRE_FALSE(choice.candidates.empty());
    const auto& pick = choice.candidates.front();
    const auto next = nagell::extend(s, node, pick);

    const IntPoly added = next.d() - s.d();
    CHECK(added == next.leading + pick.c * s.leading - s.leading);
    for (long old : s.nodes) CHECK(added(old) == 0);
    CHECK(next.solutions.size() == s.solutions.size() + 1);
    for (const auto& sol : next.solutions) CHECK(nagell::satisfies(next.d(), sol));
    CHECK(next.d().coeffs().back() == 1);
    s = next;
    ++steps;
  }
  CHECK(steps == 4);
}

TEST_CASE("the smallest-x chain stops at node 10") {
  // x^2 == 4377 (mod 5040) needs 2 to be a square mod 5.
  try {
    nagell::build_family(5, nagell::ChoicePolicy::SmallestX);
    FAIL("expected NoResidueSolution");
  } catch (const nagell::NoResidueSolution& e) {
    CHECK(e.partial().solutions.size() == 7);
    CHECK(e.partial().nodes.back() == 9);
  }
}
